#ifndef FSE_QUADRATURE_HPP
#define FSE_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <vector>

namespace fse::quad {

using Complex = std::complex<double>;
using Integrand = std::function<Complex(double)>;

struct QuadResult {
    Complex value{0.0, 0.0};
    double error = 0.0; // absolute estimate
    long evals = 0;
};

/// Adaptive Gauss-Kronrod (G7/K15) on [a, b].
QuadResult adaptive_gk(const Integrand& f, double a, double b, double tol_abs,
                       int max_intervals = 2000);

/// Same, but seeded with the given breakpoints (a = pts.front(), b = pts.back()).
QuadResult adaptive_gk_segments(const Integrand& f, const std::vector<double>& pts,
                                double tol_abs, int max_intervals = 4000);

/// Tanh-sinh rule on (0, b]; tolerates an integrable power singularity at 0.
QuadResult tanh_sinh_0b(const Integrand& f, double b, double tol_abs, int max_level = 12);

} // namespace fse::quad

#endif
