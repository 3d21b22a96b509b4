#ifndef FSE_ML_INTERNAL_HPP
#define FSE_ML_INTERNAL_HPP

#include <complex>

namespace fse::detail {

using Complex = std::complex<double>;

struct BigSeriesResult {
    Complex value{0.0, 0.0};
    double bound = 0.0; // certified absolute bound (tail + rounding)
    bool ok = false;
    int terms = 0;
    long precision_bits = 0;
};

/// Extended-precision (MPFR) evaluation of sum z^n / Gamma(alpha n + beta).
/// Precision is planned from the scanned term-magnitude peak. tol is the
/// absolute target; callers re-check against their looser abs-or-rel target.
BigSeriesResult ml_bigfloat_series(Complex alpha, Complex beta, Complex z,
                                   double tol, int max_terms);

} // namespace fse::detail

#endif
