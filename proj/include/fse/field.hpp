#ifndef FSE_FIELD_HPP
#define FSE_FIELD_HPP

#include <cstddef>
#include <vector>

#include "fse/errors.hpp"
#include "fse/scales.hpp"

namespace fse {

/// Uniform wavenumber grid: k_i = k_min + i * dk.
struct KGridSpec {
    double k_min = 0.0;
    double dk = 1.0;
    std::size_t n = 0;

    KGridSpec() = default;
    KGridSpec(double kmin, double spacing, std::size_t count)
        : k_min(kmin), dk(spacing), n(count) {
        require(n >= 1, ErrorCode::InvalidArgument, "k grid needs at least one node");
        require(dk > 0.0, ErrorCode::InvalidArgument, "k spacing must be positive");
    }
    static KGridSpec from_range(double kmin, double kmax, std::size_t count) {
        require(count >= 2, ErrorCode::InvalidArgument, "k range grid needs >= 2 nodes");
        require(kmax > kmin, ErrorCode::InvalidArgument, "k_max must exceed k_min");
        return KGridSpec(kmin, (kmax - kmin) / static_cast<double>(count - 1), count);
    }
    double k(std::size_t i) const { return k_min + static_cast<double>(i) * dk; }
    /// trapezoid weight (plain dk for a single node)
    double weight(std::size_t i) const {
        if (n == 1) return dk;
        return (i == 0 || i + 1 == n) ? 0.5 * dk : dk;
    }
};

/// Complex amplitude a(k) sampled on a uniform k grid.
struct MomentumSpectrum {
    KGridSpec grid;
    std::vector<Complex> amplitudes;

    MomentumSpectrum(KGridSpec g, std::vector<Complex> a) : grid(g), amplitudes(std::move(a)) {
        require(amplitudes.size() == grid.n, ErrorCode::InvalidArgument,
                "amplitude count must match the k grid");
    }
    std::size_t size() const { return grid.n; }

    /// Edge-decay validation: |a(edge)| < threshold * max|a|. A warning-level
    /// check; gaussian_packet turns a failure into GridTooNarrow.
    bool edge_decay_ok(double threshold = 1e-10) const {
        if (grid.n < 2) return true;
        double peak = 0.0;
        for (const Complex& a : amplitudes) peak = std::max(peak, std::abs(a));
        if (peak == 0.0) return true;
        return std::abs(amplitudes.front()) < threshold * peak &&
               std::abs(amplitudes.back()) < threshold * peak;
    }
};

/// Complex samples psi on a rectangular (t, x) grid, t-major.
struct SpaceTimeField {
    std::vector<double> t_values;
    std::vector<double> x_values;
    std::vector<Complex> values;

    SpaceTimeField() = default;
    SpaceTimeField(std::vector<double> ts, std::vector<double> xs)
        : t_values(std::move(ts)), x_values(std::move(xs)),
          values(t_values.size() * x_values.size(), Complex{0.0, 0.0}) {}

    std::size_t nt() const { return t_values.size(); }
    std::size_t nx() const { return x_values.size(); }
    Complex& at(std::size_t it, std::size_t ix) { return values[it * nx() + ix]; }
    const Complex& at(std::size_t it, std::size_t ix) const { return values[it * nx() + ix]; }
};

inline std::vector<double> linspace(double lo, double hi, std::size_t n) {
    require(n >= 1, ErrorCode::InvalidArgument, "linspace needs n >= 1");
    std::vector<double> v(n);
    if (n == 1) {
        v[0] = lo;
        return v;
    }
    double step = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) v[i] = lo + static_cast<double>(i) * step;
    return v;
}

} // namespace fse

#endif
