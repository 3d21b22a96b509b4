#include "fse/green.hpp"

#include <cmath>

#include "fse/kernels.hpp"

namespace fse {

namespace {

constexpr double kPi = 3.14159265358979323846;
const Complex kI{0.0, 1.0};

Complex phase_half_pi(Complex mu) { return std::exp(Complex(0.0, -0.5 * kPi) * mu); }

// |t|^{nu-1} at t=0: 0 for Re(nu) > 1, 1 at nu == 1, singular otherwise.
Complex power_at_zero(const DerivativeOrder& nu) {
    if (nu.nu == Complex(1.0, 0.0)) return {1.0, 0.0};
    if (nu.nu.real() > 1.0) return {0.0, 0.0};
    throw Error(ErrorCode::SingularAtZero, "Green kernel singular at t = 0 for Re(nu) <= 1");
}

Complex retarded_kernel(const DerivativeOrder& nu, double t, double k, const Scales& s,
                        const MlOptions& opts) {
    if (t < 0.0) return {0.0, 0.0};
    Complex b2k2 = beta_sq(nu, s) * (k * k);
    Complex tpow = t == 0.0 ? power_at_zero(nu)
                            : std::exp((nu.nu - 1.0) * std::log(t));
    if (tpow == Complex(0.0, 0.0)) return {0.0, 0.0};
    Complex tn = t == 0.0 ? Complex(0.0, 0.0) : std::exp(nu.nu * std::log(t));
    Complex arg = phase_half_pi(nu.nu) * tn * b2k2;
    return (1.0 / (2.0 * kPi)) * phase_half_pi(nu.nu) * tpow *
           ml(MlOrder(nu.nu, nu.nu), arg, opts).value;
}

Complex advanced_kernel(const DerivativeOrder& nu, double t, double k, const Scales& s,
                        const MlOptions& opts) {
    if (t > 0.0) return {0.0, 0.0};
    Complex b2k2 = beta_sq(nu, s) * (k * k);
    double at = -t;
    Complex tpow = t == 0.0 ? power_at_zero(nu)
                            : std::exp((nu.nu - 1.0) * std::log(at));
    if (tpow == Complex(0.0, 0.0)) return {0.0, 0.0};
    Complex tn = t == 0.0 ? Complex(0.0, 0.0) : std::exp(nu.nu * std::log(at));
    Complex arg = std::exp(Complex(0.0, 0.5 * kPi) * nu.nu) * tn * b2k2;
    return -(1.0 / (2.0 * kPi)) * phase_half_pi(nu.nu) * tpow *
           ml(MlOrder(nu.nu, nu.nu), arg, opts).value;
}

} // namespace

Complex green_kernel_k(GreenKind kind, const DerivativeOrder& nu, double t, double k,
                       const Scales& s, const MlOptions& opts) {
    switch (kind) {
        case GreenKind::Retarded: return retarded_kernel(nu, t, k, s, opts);
        case GreenKind::Advanced: return advanced_kernel(nu, t, k, s, opts);
        case GreenKind::Wheeler:
            return 0.5 * (retarded_kernel(nu, t, k, s, opts) + advanced_kernel(nu, t, k, s, opts));
    }
    throw Error(ErrorCode::InvalidArgument, "unknown Green kind");
}

SpaceTimeField apply_green(GreenKind kind, const DerivativeOrder& nu,
                           const MomentumSpectrum& spec, const Scales& s,
                           const std::vector<double>& t_values,
                           const std::vector<double>& x_values, double tol) {
    MlOptions opts;
    opts.tolerance = tol;
    SpaceTimeField field(t_values, x_values);
    const KGridSpec& grid = spec.grid;
    std::vector<Complex> row(grid.n);
    for (std::size_t it = 0; it < t_values.size(); ++it) {
        for (std::size_t ik = 0; ik < grid.n; ++ik)
            row[ik] = green_kernel_k(kind, nu, t_values[it], grid.k(ik), s, opts) *
                      spec.amplitudes[ik] * grid.weight(ik);
        for (std::size_t ix = 0; ix < x_values.size(); ++ix) {
            Complex acc{0.0, 0.0};
            for (std::size_t ik = 0; ik < grid.n; ++ik)
                acc += row[ik] * std::exp(Complex(0.0, -grid.k(ik) * x_values[ix]));
            field.at(it, ix) = acc;
        }
    }
    return field;
}

Complex green_closed_form_nu1(GreenKind kind, double dt, double dx, const Scales& s) {
    require(dt != 0.0, ErrorCode::ZeroTimeSeparation, "closed form undefined at dt = 0");
    double b2 = beta_sq(DerivativeOrder(1.0), s).real();
    Complex root = std::sqrt(1.0 / Complex(0.0, 4.0 * kPi * b2 * std::abs(dt)));
    Complex phase = std::exp(Complex(0.0, dx * dx / (4.0 * b2 * dt)));
    switch (kind) {
        case GreenKind::Retarded: return dt > 0 ? -kI * root * phase : Complex{0.0, 0.0};
        case GreenKind::Advanced: return dt < 0 ? kI * root * phase : Complex{0.0, 0.0};
        case GreenKind::Wheeler: {
            double sgn = dt > 0 ? 1.0 : -1.0;
            return -0.5 * kI * sgn * root * phase;
        }
    }
    throw Error(ErrorCode::InvalidArgument, "unknown Green kind");
}

} // namespace fse
