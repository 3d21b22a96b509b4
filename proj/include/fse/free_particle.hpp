#ifndef FSE_FREE_PARTICLE_HPP
#define FSE_FREE_PARTICLE_HPP

#include <utility>
#include <vector>

#include "fse/field.hpp"
#include "fse/scales.hpp"

namespace fse {

/// Gaussian packet a(k) = N exp(-(k-k_center)^2/(4 sigma_k^2)) e^{i k x0},
/// N fixed so the nu=1 position-space L2 norm is 1 in the continuum limit.
/// Throws GridTooNarrow when the edge-decay invariant fails on the grid.
MomentumSpectrum gaussian_packet(double k_center, double sigma_k, double x0,
                                 const KGridSpec& grid);

/// Causal free evolution (t >= 0):
///   psi(t,x) = (dk / 2 pi) sum_k E_nu[(-it)^nu w(k)] a(k) e^{-i k x}.
SpaceTimeField evolve_free(const MomentumSpectrum& spec, const DerivativeOrder& nu,
                           const Scales& s, const std::vector<double>& t_values,
                           const std::vector<double>& x_values, double tol = 1e-10);

/// One power-series term a_m(k) k0^m of the general spectral function,
/// sampled on the shared k grid.
struct GeneralSpectralTerm {
    int m = 0;
    std::vector<Complex> amplitudes;
};

/// General (two-index) free solution, same quadrature contract as evolve_free:
///   psi(t,x) = sum_m (dk / 2 pi) sum_k a_m(k) general_kernel(nu, m, w(k), t) e^{-i k x}.
SpaceTimeField evolve_free_general(const KGridSpec& grid,
                                   const std::vector<GeneralSpectralTerm>& terms,
                                   const DerivativeOrder& nu, const Scales& s,
                                   const std::vector<double>& t_values,
                                   const std::vector<double>& x_values, double tol = 1e-10,
                                   int max_m = 8);

/// Per-mode nu=1/2 branch-cut decomposition with the canonical weight,
/// transformed like evolve_free. The fields sum to the direct nu=1/2 evolution.
std::pair<SpaceTimeField, SpaceTimeField> decompose_half_shell(
    const MomentumSpectrum& spec, const Scales& s, double t,
    const std::vector<double>& x_values, double tol = 1e-8);

} // namespace fse

#endif
