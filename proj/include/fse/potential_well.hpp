#ifndef FSE_POTENTIAL_WELL_HPP
#define FSE_POTENTIAL_WELL_HPP

#include <span>
#include <utility>
#include <vector>

#include "fse/field.hpp"
#include "fse/scales.hpp"

namespace fse {

/// Infinite-well state: width a and sine-mode coefficients a_n, n = 1..N.
struct WellSpectrum {
    double width;
    std::vector<Complex> coefficients;

    WellSpectrum(double a, std::vector<Complex> coeffs)
        : width(a), coefficients(std::move(coeffs)) {
        require(width > 0.0, ErrorCode::InvalidArgument, "well width must be > 0");
        require(!coefficients.empty(), ErrorCode::InvalidArgument, "need at least one mode");
    }
    std::size_t modes() const { return coefficients.size(); }
};

/// Sine-series projection a_n = (2/a) int_0^a psi(x) sin(n pi x / a) dx by
/// trapezoid on a uniform grid over [0, width] (endpoints included).
/// Requires |psi(0)|, |psi(a)| < 1e-10 max, and n_modes < number of panels.
WellSpectrum project_initial(std::span<const Complex> samples, double width, int n_modes = 32);

/// Causal well evolution: psi(t,x) = sum_n a_n sin(n pi x / a) E_nu[(-it)^nu w_n].
SpaceTimeField evolve_well(const WellSpectrum& ws, const DerivativeOrder& nu, const Scales& s,
                           const std::vector<double>& t_values,
                           const std::vector<double>& x_values, double tol = 1e-10);

struct GeneralWellTerm {
    int n = 1;
    int m = 0;
    Complex coefficient{0.0, 0.0};
};

/// General two-index well solution:
///   psi(t,x) = sum a_nm sin(n pi x / a) general_kernel(nu, m, w_n, t).
SpaceTimeField evolve_well_general(const std::vector<GeneralWellTerm>& terms,
                                   const DerivativeOrder& nu, const Scales& s, double width,
                                   const std::vector<double>& t_values,
                                   const std::vector<double>& x_values, double tol = 1e-10,
                                   int max_n = 1024, int max_m = 8);

/// Per-mode nu=1/2 decomposition with the canonical weight; the two fields sum
/// to evolve_well at nu = 1/2 and the on-shell mode phases are e^{-i w_n^2 t}.
std::pair<SpaceTimeField, SpaceTimeField> decompose_half_well(
    const WellSpectrum& ws, const Scales& s, double t, const std::vector<double>& x_values,
    double tol = 1e-8);

} // namespace fse

#endif
