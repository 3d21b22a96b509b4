#ifndef FSE_KERNELS_HPP
#define FSE_KERNELS_HPP

#include <complex>
#include <functional>

#include "fse/mittag_leffler.hpp"
#include "fse/scales.hpp"

namespace fse {

/// Boundary value (t+i0)^mu = |t|^mu e^{i mu arg}, arg = 0 for t>0 and pi for
/// t<0. Throws SingularAtZero at t = 0 unless the limit exists (Re mu > 0,
/// giving 0, or mu = 0, giving 1).
Complex i0_power(double t, Complex mu);

/// (-it)^nu for t >= 0 on the principal branch: t^nu e^{-i pi nu / 2}.
Complex minus_it_power(double t, const DerivativeOrder& nu);

/// Causal time kernel E_nu[(-it)^nu w] for t >= 0; equals 1 at t = 0.
Complex causal_kernel(const DerivativeOrder& nu, Complex w, double t,
                      const MlOptions& opts = {});

/// Two-index kernel of the general solution:
///   e^{-i pi (nu-m)/2} (t+i0)^{nu-m-1} E_{nu,nu-m}[(t+i0)^nu e^{-i pi nu/2} w].
Complex general_kernel(const DerivativeOrder& nu, int m, Complex w, double t,
                       const MlOptions& opts = {});

/// Pole amplitude and cut density of a nu=1/2 mode's spectral function.
/// onshell(t) = pole_amplitude * e^{-i w^2 t};
/// offshell(t) = int_0^inf cut_density(s) / (s + w^2) e^{+i s t} ds.
struct CutWeight {
    std::function<Complex(double)> cut_density;
    Complex pole_amplitude;
};

/// The weight induced by the causal solution: pole amplitude 2 and density
/// -(w/pi) s^{-1/2}, derived once from the contour algebra and frozen in the
/// test fixtures. With it, onshell + offshell = causal_kernel(1/2, w, t).
CutWeight canonical_half_weight(double w);

struct HalfDecomposition {
    Complex onshell{0.0, 0.0};
    Complex offshell{0.0, 0.0};
    double quad_error = 0.0;
};

/// Off-shell integral rule: the canonical fast path rotates the cut integral
/// onto the imaginary axis (exact by analyticity of the canonical density);
/// RealAxisSegments integrates period-pi/t segments with Euler acceleration of
/// the oscillatory tail and works for any caller-supplied density.
enum class CutQuadrature { RotatedAxis, RealAxisSegments };

/// Decomposition for a caller-supplied weight (real-axis rule).
HalfDecomposition branch_decomposition_half(double w, const CutWeight& weight, double t,
                                            double tol = 1e-8);

/// Decomposition of the causal nu=1/2 kernel with the canonical weight.
HalfDecomposition decompose_causal_half(double w, double t, double tol = 1e-10,
                                        CutQuadrature rule = CutQuadrature::RotatedAxis);

} // namespace fse

#endif
