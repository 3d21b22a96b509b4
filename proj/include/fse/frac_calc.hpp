#ifndef FSE_FRAC_CALC_HPP
#define FSE_FRAC_CALC_HPP

#include <span>
#include <vector>

#include "fse/field.hpp"
#include "fse/scales.hpp"

namespace fse {

/// Upper/lower boundary-value spectrum of the complex Fourier transform. For
/// smooth rapidly decreasing samples the two branches coincide off k = 0 and
/// upper - lower reconstructs the ordinary transform.
struct SignedSpectrum {
    std::vector<double> k_values;
    std::vector<Complex> upper;
    std::vector<Complex> lower;
};

/// Half-line transforms on a uniform x grid containing 0:
///   upper(k) = int_0^inf f e^{ikx} dx,  lower(k) = -int_{-inf}^0 f e^{ikx} dx.
/// Requires edge decay |f(edge)| < 1e-10 max.
SignedSpectrum forward_transform(std::span<const double> x_values,
                                 std::span<const Complex> samples,
                                 std::span<const double> k_values);

/// Multiply both branches by (-ik)^lambda with -ik = |k| e^{-i pi sgn(k)/2}
/// (principal power; never on the cut for real k). The entire-function term of
/// the underlying definition is fixed to zero (canonical primitive); for
/// Re(lambda) < 0 the amplitudes must vanish at k = 0.
SignedSpectrum frac_deriv(const SignedSpectrum& spectrum, Complex lambda);

/// f(x) = (dk / 2 pi) sum_k (upper - lower) e^{-ikx}.
std::vector<Complex> inverse_transform(const SignedSpectrum& spectrum,
                                       std::span<const double> x_values);

/// Ambiguity polynomial constant + linear * x.
struct PrimitiveAmbiguity {
    Complex constant{0.0, 0.0};
    Complex linear{0.0, 0.0};
};

/// The primitive ambiguity carried by an entire weight a(k) = sum_j c_j k^j:
/// lambda = -1 gives the constant 2 pi a(0); lambda = -2 gives
/// 2 pi a'(0) - 2 pi i a(0) x by the same residue normalization.
PrimitiveAmbiguity primitive_ambiguity(int lambda, std::span<const Complex> entire_coefficients);

} // namespace fse

#endif
