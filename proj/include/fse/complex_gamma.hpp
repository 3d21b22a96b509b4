#ifndef FSE_COMPLEX_GAMMA_HPP
#define FSE_COMPLEX_GAMMA_HPP

#include <complex>

namespace fse {

/// Gamma(z) for complex z (Lanczos; reflection for Re z < 0.5). Real arguments
/// go through std::tgamma. Poles return inf.
std::complex<double> cgamma(std::complex<double> z);

/// 1/Gamma(z): entire. Exactly 0 when z is a non-positive integer (within
/// 1e-12 of one for the real case), which is what series terms over
/// Gamma(alpha n + beta) need at the poles.
std::complex<double> crgamma(std::complex<double> z);

/// ln|Gamma(z)| — magnitude planning for series/asymptotics.
double log_abs_gamma(std::complex<double> z);

} // namespace fse

#endif
