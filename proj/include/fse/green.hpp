#ifndef FSE_GREEN_HPP
#define FSE_GREEN_HPP

#include "fse/field.hpp"
#include "fse/mittag_leffler.hpp"
#include "fse/scales.hpp"

namespace fse {

enum class GreenKind { Retarded, Advanced, Wheeler };

/// k-space Green kernel. Retarded is supported on t > 0:
///   (1/2pi) e^{-i pi nu/2} t^{nu-1} E_{nu,nu}(e^{-i pi nu/2} t^nu beta^2 k^2);
/// advanced mirrors it on t < 0; Wheeler = (retarded + advanced)/2 at every t.
/// Kernels are distributional in x: only k-space values and pairings with
/// decaying packets are exposed.
Complex green_kernel_k(GreenKind kind, const DerivativeOrder& nu, double t, double k,
                       const Scales& s, const MlOptions& opts = {});

/// Pairing with a packet: field(t,x) = dk * sum_k green_kernel_k(t,k) a(k) e^{-ikx}
/// (so at nu=1 the retarded field equals -i times the causal free evolution).
SpaceTimeField apply_green(GreenKind kind, const DerivativeOrder& nu,
                           const MomentumSpectrum& spec, const Scales& s,
                           const std::vector<double>& t_values,
                           const std::vector<double>& x_values, double tol = 1e-10);

/// nu = 1 closed forms in beta^2 variables:
///   retarded: -i H(dt) (1/(4 pi i beta^2 dt))^{1/2} e^{i dx^2/(4 beta^2 dt)},
/// advanced and Wheeler per the time-reversed and half-sum expressions.
Complex green_closed_form_nu1(GreenKind kind, double dt, double dx, const Scales& s);

} // namespace fse

#endif
