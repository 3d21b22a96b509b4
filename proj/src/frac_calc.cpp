#include "fse/frac_calc.hpp"

#include <cmath>

namespace fse {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::size_t locate_origin(std::span<const double> x, double dx) {
    for (std::size_t i = 0; i < x.size(); ++i)
        if (std::abs(x[i]) < 1e-9 * dx) return i;
    throw Error(ErrorCode::InvalidArgument, "x grid must contain 0 for the half-line split");
}

// (-ik)^lambda on the real axis
Complex cut_multiplier(double k, Complex lambda) {
    if (k == 0.0) {
        if (lambda == Complex(0.0, 0.0)) return {1.0, 0.0};
        return {0.0, 0.0}; // Re(lambda) > 0 limit; Re < 0 guarded by caller
    }
    double s = k > 0 ? -0.5 * kPi : 0.5 * kPi;
    return std::exp(lambda * Complex(std::log(std::abs(k)), s));
}

} // namespace

SignedSpectrum forward_transform(std::span<const double> x_values,
                                 std::span<const Complex> samples,
                                 std::span<const double> k_values) {
    require(x_values.size() == samples.size(), ErrorCode::InvalidArgument,
            "sample count must match the x grid");
    require(x_values.size() >= 3, ErrorCode::InvalidArgument, "need at least 3 samples");
    const double dx = x_values[1] - x_values[0];
    require(dx > 0.0, ErrorCode::InvalidArgument, "x grid must be increasing");
    double peak = 0.0;
    for (const Complex& v : samples) peak = std::max(peak, std::abs(v));
    if (peak > 0.0)
        require(std::abs(samples.front()) < 1e-10 * peak && std::abs(samples.back()) < 1e-10 * peak,
                ErrorCode::EdgeDecayViolation, "samples must decay at the grid edges");
    const std::size_t i0 = locate_origin(x_values, dx);

    SignedSpectrum out;
    out.k_values.assign(k_values.begin(), k_values.end());
    out.upper.resize(k_values.size());
    out.lower.resize(k_values.size());
    for (std::size_t ik = 0; ik < k_values.size(); ++ik) {
        const double k = k_values[ik];
        Complex up{0.0, 0.0}, lo{0.0, 0.0};
        for (std::size_t j = i0; j < x_values.size(); ++j) { // [0, xmax]
            double w = (j == i0 || j + 1 == x_values.size()) ? 0.5 : 1.0;
            up += w * samples[j] * std::exp(Complex(0.0, k * x_values[j]));
        }
        for (std::size_t j = 0; j <= i0; ++j) { // [xmin, 0]
            double w = (j == 0 || j == i0) ? 0.5 : 1.0;
            lo += w * samples[j] * std::exp(Complex(0.0, k * x_values[j]));
        }
        out.upper[ik] = up * dx;
        out.lower[ik] = -lo * dx;
    }
    return out;
}

SignedSpectrum frac_deriv(const SignedSpectrum& spectrum, Complex lambda) {
    if (lambda == Complex(0.0, 0.0)) return spectrum; // exact identity
    const bool negative_order = lambda.real() < 0.0;
    if (negative_order) {
        // the reconstruction only sees upper - lower; it must vanish where the
        // collapsed contour pinches the (-ik)^lambda singularity
        double peak = 0.0;
        for (std::size_t i = 0; i < spectrum.upper.size(); ++i)
            peak = std::max(peak, std::abs(spectrum.upper[i] - spectrum.lower[i]));
        for (std::size_t i = 0; i < spectrum.k_values.size(); ++i) {
            if (spectrum.k_values[i] == 0.0 ||
                std::abs(spectrum.k_values[i]) <
                    1e-9 * (std::abs(spectrum.k_values.back()) + 1.0)) {
                require(std::abs(spectrum.upper[i] - spectrum.lower[i]) <= 1e-10 * peak,
                        ErrorCode::OriginSingularity,
                        "amplitude must vanish at k = 0 for Re(lambda) < 0");
            }
        }
    }
    SignedSpectrum out;
    out.k_values = spectrum.k_values;
    out.upper.resize(spectrum.upper.size());
    out.lower.resize(spectrum.lower.size());
    for (std::size_t i = 0; i < spectrum.k_values.size(); ++i) {
        if (negative_order && spectrum.k_values[i] == 0.0) {
            out.upper[i] = out.lower[i] = Complex{0.0, 0.0};
            continue;
        }
        Complex mul = cut_multiplier(spectrum.k_values[i], lambda);
        out.upper[i] = mul * spectrum.upper[i];
        out.lower[i] = mul * spectrum.lower[i];
    }
    return out;
}

std::vector<Complex> inverse_transform(const SignedSpectrum& spectrum,
                                       std::span<const double> x_values) {
    require(spectrum.k_values.size() >= 2, ErrorCode::InvalidArgument, "need >= 2 k nodes");
    const double dk = spectrum.k_values[1] - spectrum.k_values[0];
    require(dk > 0.0, ErrorCode::InvalidArgument, "k grid must be increasing");
    std::vector<Complex> out(x_values.size());
    for (std::size_t ix = 0; ix < x_values.size(); ++ix) {
        Complex acc{0.0, 0.0};
        for (std::size_t i = 0; i < spectrum.k_values.size(); ++i) {
            double w = (i == 0 || i + 1 == spectrum.k_values.size()) ? 0.5 : 1.0;
            acc += w * (spectrum.upper[i] - spectrum.lower[i]) *
                   std::exp(Complex(0.0, -spectrum.k_values[i] * x_values[ix]));
        }
        out[ix] = acc * dk / (2.0 * kPi);
    }
    return out;
}

PrimitiveAmbiguity primitive_ambiguity(int lambda, std::span<const Complex> entire_coefficients) {
    require(lambda == -1 || lambda == -2, ErrorCode::UnsupportedLambda,
            "ambiguity terms implemented for lambda in {-1, -2} only");
    Complex c0 = entire_coefficients.empty() ? Complex{0.0, 0.0} : entire_coefficients[0];
    Complex c1 = entire_coefficients.size() > 1 ? entire_coefficients[1] : Complex{0.0, 0.0};
    PrimitiveAmbiguity amb;
    if (lambda == -1) {
        amb.constant = 2.0 * kPi * c0;
    } else {
        // residue of a(k) e^{-ikx} / k^2 at 0 with the lambda = -1 normalization
        amb.constant = 2.0 * kPi * c1;
        amb.linear = Complex(0.0, -2.0 * kPi) * c0;
    }
    return amb;
}

} // namespace fse
