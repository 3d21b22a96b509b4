#ifndef FSE_TEST_SUPPORT_HPP
#define FSE_TEST_SUPPORT_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "fse/field.hpp"
#include "fse/quadrature.hpp"

namespace testsupport {

using fse::Complex;
using fse::SpaceTimeField;

constexpr double kPi = 3.14159265358979323846;

// trapezoid L2 norm of one time slice over the x grid
inline double l2_norm_row(const SpaceTimeField& f, std::size_t it) {
    double acc = 0.0;
    for (std::size_t ix = 0; ix + 1 < f.nx(); ++ix) {
        double dx = f.x_values[ix + 1] - f.x_values[ix];
        double a = std::norm(f.at(it, ix));
        double b = std::norm(f.at(it, ix + 1));
        acc += 0.5 * dx * (a + b);
    }
    return std::sqrt(acc);
}

inline double l2_rel_diff(const SpaceTimeField& a, const SpaceTimeField& b) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        num += std::norm(a.values[i] - b.values[i]);
        den += std::norm(b.values[i]);
    }
    return std::sqrt(num / std::max(den, 1e-300));
}

// Independent nu=1 dispersion oracle: continuum adaptive quadrature of
//   (1/2pi) int a(k) e^{-i(beta2 k^2 t + k x)} dk
// for a caller-supplied smooth amplitude function.
inline Complex dispersion_oracle_nu1(const std::function<Complex(double)>& amplitude,
                                     double beta2, double t, double x, double k_lo,
                                     double k_hi) {
    auto f = [&](double k) -> Complex {
        return amplitude(k) * std::exp(Complex(0.0, -(beta2 * k * k * t + k * x)));
    };
    fse::quad::QuadResult q = fse::quad::adaptive_gk(f, k_lo, k_hi, 1e-11, 4000);
    return q.value / (2.0 * kPi);
}

// Contour-quadrature oracle for the two-index kernel: the left side of the
// inverse complex transform identity, integrated along the rectangle of
// half-height 1 with Euler-accelerated oscillatory tails.
inline Complex contour_kernel_oracle(double nu, int m, double w, double t) {
    auto g = [&](Complex k) -> Complex {
        return std::pow(k, static_cast<double>(m)) / (std::pow(k, nu) - w) *
               std::exp(Complex(0.0, -1.0) * k * t);
    };
    auto horiz = [&](double y, double x0, double x1) -> Complex {
        auto f = [&](double x) { return g(Complex(x, y)); };
        return fse::quad::adaptive_gk(f, x0, x1, 1e-12, 400).value;
    };
    const double h = 1.0;
    const double x0 = 40.0;
    auto tail = [&](double y, double edge, int dir) -> Complex {
        const int nseg = 40;
        const double seg = kPi / t;
        std::vector<Complex> part;
        Complex acc{0.0, 0.0};
        for (int j = 0; j < nseg; ++j) {
            double lo = edge + dir * j * seg;
            double hi = edge + dir * (j + 1) * seg;
            if (dir < 0) std::swap(lo, hi);
            acc += horiz(y, lo, hi);
            part.push_back(acc);
        }
        while (part.size() > 1) {
            for (std::size_t i = 0; i + 1 < part.size(); ++i)
                part[i] = 0.5 * (part[i] + part[i + 1]);
            part.pop_back();
        }
        return part[0];
    };
    Complex up = tail(h, -x0, -1) + horiz(h, -x0, x0) + tail(h, x0, 1);
    Complex dn = tail(-h, -x0, -1) + horiz(-h, -x0, x0) + tail(-h, x0, 1);
    return (up - dn) / (2.0 * kPi);
}

} // namespace testsupport

#endif
