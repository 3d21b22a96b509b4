#ifndef FSE_SCALES_HPP
#define FSE_SCALES_HPP

#include <cmath>
#include <complex>

#include "fse/errors.hpp"

namespace fse {

using Complex = std::complex<double>;

/// Planck-scaled parameters: dimensionless mass ratio n_m = m/M_p plus the
/// Planck length/time units (both default to 1, i.e. fully Planck-normalized).
struct Scales {
    double n_m = 1.0;
    double l_p = 1.0;
    double t_p = 1.0;

    Scales() = default;
    Scales(double nm, double lp = 1.0, double tp = 1.0) : n_m(nm), l_p(lp), t_p(tp) {
        require(n_m > 0 && l_p > 0 && t_p > 0, ErrorCode::InvalidArgument,
                "Scales fields must be strictly positive");
    }
};

/// Order of the time derivative; Re(nu) > 0 is required everywhere.
struct DerivativeOrder {
    Complex nu;

    DerivativeOrder(Complex v) : nu(v) {
        require(nu.real() > 0, ErrorCode::InvalidOrder, "Re(nu) must be > 0");
    }
    DerivativeOrder(double v) : DerivativeOrder(Complex(v, 0.0)) {}
};

// t_p^nu by the principal power; t_p > 0 so log is real.
inline Complex tp_pow_nu(const DerivativeOrder& nu, const Scales& s) {
    return std::exp(nu.nu * std::log(s.t_p));
}

/// beta^2 = l_p^2 / (2 t_p^nu n_m); the dispersion quantity per unit k^2.
inline Complex beta_sq(const DerivativeOrder& nu, const Scales& s) {
    return (s.l_p * s.l_p) / (2.0 * s.n_m * tp_pow_nu(nu, s));
}

/// w = l_p^2 k^2 / (2 t_p^nu n_m); shares beta_sq so w == beta_sq * k^2 exactly.
inline Complex dispersion_w(double k, const DerivativeOrder& nu, const Scales& s) {
    return beta_sq(nu, s) * (k * k);
}

/// Well eigenvalue frequency w_n = (1/(2 n_m)) (n pi l_p / width)^2 / t_p^nu.
/// Factored as n^2 * base so that w_n / w_1 == n^2 exactly.
inline Complex well_w(int n, double width, const DerivativeOrder& nu, const Scales& s) {
    require(n >= 1, ErrorCode::InvalidArgument, "well mode index must be >= 1");
    require(width > 0, ErrorCode::InvalidArgument, "well width must be > 0");
    double u = M_PI * s.l_p / width;
    Complex base = (u * u) / (2.0 * s.n_m * tp_pow_nu(nu, s));
    return base * static_cast<double>(n * n);
}

} // namespace fse

#endif
