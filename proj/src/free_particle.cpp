#include "fse/free_particle.hpp"

#include <cmath>
#include <functional>

#include "fse/kernels.hpp"

namespace fse {

namespace {

constexpr double kPi = 3.14159265358979323846;

// psi(t_i, x_j) = prefactor * sum_k weight_k * kern(t_i, k) * a(k) e^{-i k x_j}
SpaceTimeField transform_with_kernel(const KGridSpec& grid, const std::vector<Complex>& amps,
                                     const std::vector<double>& ts,
                                     const std::vector<double>& xs, double prefactor,
                                     const std::function<Complex(double, double)>& kern) {
    SpaceTimeField field(ts, xs);
    std::vector<Complex> row(grid.n);
    for (std::size_t it = 0; it < ts.size(); ++it) {
        for (std::size_t ik = 0; ik < grid.n; ++ik)
            row[ik] = kern(ts[it], grid.k(ik)) * amps[ik] * grid.weight(ik) * prefactor;
        for (std::size_t ix = 0; ix < xs.size(); ++ix) {
            Complex acc{0.0, 0.0};
            for (std::size_t ik = 0; ik < grid.n; ++ik)
                acc += row[ik] * std::exp(Complex(0.0, -grid.k(ik) * xs[ix]));
            field.at(it, ix) = acc;
        }
    }
    return field;
}

} // namespace

MomentumSpectrum gaussian_packet(double k_center, double sigma_k, double x0,
                                 const KGridSpec& grid) {
    require(sigma_k > 0.0, ErrorCode::InvalidArgument, "sigma_k must be > 0");
    // continuum normalization: (1/2pi) int |a|^2 dk = 1
    double norm = std::pow(2.0 * kPi, 0.25) / std::sqrt(sigma_k);
    std::vector<Complex> amps(grid.n);
    for (std::size_t i = 0; i < grid.n; ++i) {
        double k = grid.k(i);
        double g = std::exp(-(k - k_center) * (k - k_center) / (4.0 * sigma_k * sigma_k));
        amps[i] = norm * g * std::exp(Complex(0.0, k * x0));
    }
    MomentumSpectrum spec(grid, std::move(amps));
    require(spec.edge_decay_ok(), ErrorCode::GridTooNarrow,
            "k grid too narrow: packet amplitude does not decay at the edges");
    return spec;
}

SpaceTimeField evolve_free(const MomentumSpectrum& spec, const DerivativeOrder& nu,
                           const Scales& s, const std::vector<double>& t_values,
                           const std::vector<double>& x_values, double tol) {
    for (double t : t_values)
        require(t >= 0.0, ErrorCode::NegativeTime, "causal free evolution requires t >= 0");
    MlOptions opts;
    opts.tolerance = tol;
    auto kern = [&](double t, double k) {
        return causal_kernel(nu, dispersion_w(k, nu, s), t, opts);
    };
    return transform_with_kernel(spec.grid, spec.amplitudes, t_values, x_values,
                                 1.0 / (2.0 * kPi), kern);
}

SpaceTimeField evolve_free_general(const KGridSpec& grid,
                                   const std::vector<GeneralSpectralTerm>& terms,
                                   const DerivativeOrder& nu, const Scales& s,
                                   const std::vector<double>& t_values,
                                   const std::vector<double>& x_values, double tol, int max_m) {
    SpaceTimeField field(t_values, x_values);
    MlOptions opts;
    opts.tolerance = tol;
    for (const GeneralSpectralTerm& term : terms) {
        require(term.m >= 0 && term.m <= max_m, ErrorCode::InvalidArgument,
                "term index m outside configured bound");
        require(term.amplitudes.size() == grid.n, ErrorCode::InvalidArgument,
                "term amplitudes must match the k grid");
        if (nu.nu.real() - term.m - 1 < 0)
            for (double t : t_values)
                require(t != 0.0, ErrorCode::SingularAtZero,
                        "general solution singular at t = 0 for Re(nu - m - 1) < 0");
        auto kern = [&](double t, double k) {
            return general_kernel(nu, term.m, dispersion_w(k, nu, s), t, opts);
        };
        SpaceTimeField part = transform_with_kernel(grid, term.amplitudes, t_values, x_values,
                                                    1.0 / (2.0 * kPi), kern);
        for (std::size_t i = 0; i < field.values.size(); ++i) field.values[i] += part.values[i];
    }
    return field;
}

std::pair<SpaceTimeField, SpaceTimeField> decompose_half_shell(
    const MomentumSpectrum& spec, const Scales& s, double t,
    const std::vector<double>& x_values, double tol) {
    require(t > 0.0, ErrorCode::InvalidArgument, "decomposition requires t > 0");
    const DerivativeOrder half{Complex(0.5, 0.0)};
    std::vector<double> ts{t};
    // cache the per-k decompositions; both transforms reuse them
    std::vector<HalfDecomposition> parts(spec.grid.n);
    for (std::size_t ik = 0; ik < spec.grid.n; ++ik) {
        double w = dispersion_w(spec.grid.k(ik), half, s).real();
        parts[ik] = decompose_causal_half(w, t, tol);
    }
    auto on = [&](double, double k) {
        std::size_t ik = static_cast<std::size_t>(std::lround((k - spec.grid.k_min) / spec.grid.dk));
        return parts[ik].onshell;
    };
    auto off = [&](double, double k) {
        std::size_t ik = static_cast<std::size_t>(std::lround((k - spec.grid.k_min) / spec.grid.dk));
        return parts[ik].offshell;
    };
    SpaceTimeField fon = transform_with_kernel(spec.grid, spec.amplitudes, ts, x_values,
                                               1.0 / (2.0 * kPi), on);
    SpaceTimeField foff = transform_with_kernel(spec.grid, spec.amplitudes, ts, x_values,
                                                1.0 / (2.0 * kPi), off);
    return {std::move(fon), std::move(foff)};
}

} // namespace fse
