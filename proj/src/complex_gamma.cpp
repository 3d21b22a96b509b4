#include "fse/complex_gamma.hpp"

#include <cmath>
#include <limits>

namespace fse {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Lanczos, g = 7, 9 coefficients (Godfrey). ~1e-13 relative for Re z > 0.5.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

double lgamma_threadsafe(double x) {
    int sign = 0;
    return lgamma_r(x, &sign);
}

bool is_nonpositive_integer(std::complex<double> z, double tol = 1e-12) {
    if (z.imag() != 0.0) return false;
    double r = z.real();
    if (r > 0.5) return false;
    return std::abs(r - std::round(r)) <= tol * std::max(1.0, std::abs(r));
}

// Re z >= 0.5 only.
std::complex<double> lanczos_gamma_core(std::complex<double> z) {
    z -= 1.0;
    std::complex<double> x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
    std::complex<double> t = z + kLanczosG + 0.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

} // namespace

std::complex<double> cgamma(std::complex<double> z) {
    if (z.imag() == 0.0) {
        double r = z.real();
        if (is_nonpositive_integer(z))
            return {std::numeric_limits<double>::infinity(), 0.0};
        if (std::abs(r) < 170.0 || r > 0) return {std::tgamma(r), 0.0};
    }
    if (z.real() < 0.5) {
        // reflection: Gamma(z) = pi / (sin(pi z) Gamma(1 - z))
        std::complex<double> s = std::sin(kPi * z);
        if (s == std::complex<double>(0.0, 0.0))
            return {std::numeric_limits<double>::infinity(), 0.0};
        return kPi / (s * lanczos_gamma_core(1.0 - z));
    }
    return lanczos_gamma_core(z);
}

std::complex<double> crgamma(std::complex<double> z) {
    if (is_nonpositive_integer(z)) return {0.0, 0.0};
    if (z.imag() == 0.0) {
        double r = z.real();
        if (r > 0 && r < 171.0) return {1.0 / std::tgamma(r), 0.0};
        if (r <= 0) {
            // reflection in real arithmetic: 1/Gamma(r) = sin(pi r) Gamma(1-r) / pi
            double s = std::sin(kPi * r);
            double lg = lgamma_threadsafe(1.0 - r);
            // may overflow for very negative r; scale through logs
            double mag = std::log(std::abs(s)) + lg - std::log(kPi);
            if (mag > 700.0) return {std::copysign(std::numeric_limits<double>::infinity(), s), 0.0};
            return {std::copysign(std::exp(mag), s), 0.0};
        }
        return {0.0, 0.0}; // Gamma overflows: reciprocal underflows
    }
    if (z.real() < 0.5) {
        std::complex<double> s = std::sin(kPi * z);
        return s * lanczos_gamma_core(1.0 - z) / kPi;
    }
    std::complex<double> g = lanczos_gamma_core(z);
    return 1.0 / g;
}

double log_abs_gamma(std::complex<double> z) {
    if (z.imag() == 0.0) {
        double r = z.real();
        if (is_nonpositive_integer(z)) return std::numeric_limits<double>::infinity();
        if (r > 0) return lgamma_threadsafe(r);
        // ln|Gamma(r)| = ln(pi) - ln|sin(pi r)| - ln Gamma(1-r)
        return std::log(kPi) - std::log(std::abs(std::sin(kPi * r))) - lgamma_threadsafe(1.0 - r);
    }
    if (z.real() < 0.5) {
        std::complex<double> s = std::sin(kPi * z);
        return std::log(kPi) - std::log(std::abs(s)) - log_abs_gamma(1.0 - z);
    }
    // log of the Lanczos form, assembled in log space to dodge overflow
    std::complex<double> zm = z - 1.0;
    std::complex<double> x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (zm + static_cast<double>(i));
    std::complex<double> t = zm + kLanczosG + 0.5;
    std::complex<double> lg = 0.5 * std::log(2.0 * kPi) + (zm + 0.5) * std::log(t) - t + std::log(x);
    return lg.real();
}

} // namespace fse
