#include "fse/potential_well.hpp"

#include <cmath>
#include <functional>

#include "fse/kernels.hpp"

namespace fse {

namespace {

constexpr double kPi = 3.14159265358979323846;

// psi(t_i, x_j) = sum_modes coeff(t_i, n) sin(n pi x_j / width)
SpaceTimeField assemble_modes(double width, const std::vector<double>& ts,
                              const std::vector<double>& xs,
                              const std::vector<int>& mode_index,
                              const std::function<Complex(double, std::size_t)>& time_factor) {
    SpaceTimeField field(ts, xs);
    for (std::size_t it = 0; it < ts.size(); ++it) {
        for (std::size_t j = 0; j < mode_index.size(); ++j) {
            Complex c = time_factor(ts[it], j);
            if (c == Complex(0.0, 0.0)) continue;
            double kn = static_cast<double>(mode_index[j]) * kPi / width;
            for (std::size_t ix = 0; ix < xs.size(); ++ix)
                field.at(it, ix) += c * std::sin(kn * xs[ix]);
        }
    }
    return field;
}

void check_x_range(const std::vector<double>& xs, double width) {
    for (double x : xs)
        require(x >= -1e-12 && x <= width * (1.0 + 1e-12), ErrorCode::InvalidArgument,
                "x grid must lie within the well");
}

} // namespace

WellSpectrum project_initial(std::span<const Complex> samples, double width, int n_modes) {
    require(width > 0.0, ErrorCode::InvalidArgument, "width must be > 0");
    require(samples.size() >= 3, ErrorCode::InvalidArgument, "need at least 3 samples");
    require(n_modes >= 1 && static_cast<std::size_t>(n_modes) < samples.size() - 1,
            ErrorCode::InvalidArgument, "n_modes must be < number of grid panels");
    double peak = 0.0;
    for (const Complex& v : samples) peak = std::max(peak, std::abs(v));
    if (peak > 0.0)
        require(std::abs(samples.front()) < 1e-10 * peak && std::abs(samples.back()) < 1e-10 * peak,
                ErrorCode::BoundaryViolation, "initial state must vanish at the well walls");

    const std::size_t n = samples.size();
    const double dx = width / static_cast<double>(n - 1);
    std::vector<Complex> coeffs(static_cast<std::size_t>(n_modes));
    for (int mode = 1; mode <= n_modes; ++mode) {
        Complex acc{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j) {
            double wgt = (j == 0 || j + 1 == n) ? 0.5 : 1.0;
            double x = static_cast<double>(j) * dx;
            acc += wgt * samples[j] * std::sin(static_cast<double>(mode) * kPi * x / width);
        }
        coeffs[static_cast<std::size_t>(mode - 1)] = acc * dx * (2.0 / width);
    }
    return WellSpectrum(width, std::move(coeffs));
}

SpaceTimeField evolve_well(const WellSpectrum& ws, const DerivativeOrder& nu, const Scales& s,
                           const std::vector<double>& t_values,
                           const std::vector<double>& x_values, double tol) {
    for (double t : t_values)
        require(t >= 0.0, ErrorCode::NegativeTime, "causal well evolution requires t >= 0");
    check_x_range(x_values, ws.width);
    MlOptions opts;
    opts.tolerance = tol;
    std::vector<int> idx(ws.modes());
    for (std::size_t j = 0; j < ws.modes(); ++j) idx[j] = static_cast<int>(j + 1);
    auto tf = [&](double t, std::size_t j) {
        if (ws.coefficients[j] == Complex(0.0, 0.0)) return Complex(0.0, 0.0);
        Complex wn = well_w(idx[j], ws.width, nu, s);
        return ws.coefficients[j] * causal_kernel(nu, wn, t, opts);
    };
    return assemble_modes(ws.width, t_values, x_values, idx, tf);
}

SpaceTimeField evolve_well_general(const std::vector<GeneralWellTerm>& terms,
                                   const DerivativeOrder& nu, const Scales& s, double width,
                                   const std::vector<double>& t_values,
                                   const std::vector<double>& x_values, double tol, int max_n,
                                   int max_m) {
    require(width > 0.0, ErrorCode::InvalidArgument, "width must be > 0");
    check_x_range(x_values, width);
    MlOptions opts;
    opts.tolerance = tol;
    std::vector<int> idx;
    idx.reserve(terms.size());
    for (const GeneralWellTerm& term : terms) {
        require(term.n >= 1 && term.n <= max_n, ErrorCode::InvalidArgument,
                "mode index n outside configured bound");
        require(term.m >= 0 && term.m <= max_m, ErrorCode::InvalidArgument,
                "power index m outside configured bound");
        if (nu.nu.real() - term.m - 1 < 0)
            for (double t : t_values)
                require(t != 0.0, ErrorCode::SingularAtZero,
                        "general well solution singular at t = 0");
        idx.push_back(term.n);
    }
    auto tf = [&](double t, std::size_t j) {
        const GeneralWellTerm& term = terms[j];
        Complex wn = well_w(term.n, width, nu, s);
        return term.coefficient * general_kernel(nu, term.m, wn, t, opts);
    };
    return assemble_modes(width, t_values, x_values, idx, tf);
}

std::pair<SpaceTimeField, SpaceTimeField> decompose_half_well(
    const WellSpectrum& ws, const Scales& s, double t, const std::vector<double>& x_values,
    double tol) {
    require(t > 0.0, ErrorCode::InvalidArgument, "decomposition requires t > 0");
    check_x_range(x_values, ws.width);
    const DerivativeOrder half{Complex(0.5, 0.0)};
    std::vector<double> ts{t};
    std::vector<int> idx(ws.modes());
    std::vector<HalfDecomposition> parts(ws.modes());
    for (std::size_t j = 0; j < ws.modes(); ++j) {
        idx[j] = static_cast<int>(j + 1);
        double wn = well_w(idx[j], ws.width, half, s).real();
        parts[j] = decompose_causal_half(wn, t, tol);
    }
    auto on = [&](double, std::size_t j) { return ws.coefficients[j] * parts[j].onshell; };
    auto off = [&](double, std::size_t j) { return ws.coefficients[j] * parts[j].offshell; };
    SpaceTimeField fon = assemble_modes(ws.width, ts, x_values, idx, on);
    SpaceTimeField foff = assemble_modes(ws.width, ts, x_values, idx, off);
    return {std::move(fon), std::move(foff)};
}

} // namespace fse
