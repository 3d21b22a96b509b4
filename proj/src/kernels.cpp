#include "fse/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fse/quadrature.hpp"

namespace fse {

namespace {

constexpr double kPi = 3.14159265358979323846;
const Complex kI{0.0, 1.0};

// exp(-i pi mu / 2)
Complex phase_half_pi(Complex mu) { return std::exp(Complex(0.0, -0.5 * kPi) * mu); }

// repeated averaging (Euler transform) of a slowly alternating segment series
Complex euler_accelerate(const std::vector<Complex>& segments) {
    std::vector<Complex> part(segments.size());
    Complex acc{0.0, 0.0};
    for (size_t i = 0; i < segments.size(); ++i) {
        acc += segments[i];
        part[i] = acc;
    }
    while (part.size() > 1) {
        for (size_t i = 0; i + 1 < part.size(); ++i) part[i] = 0.5 * (part[i] + part[i + 1]);
        part.pop_back();
    }
    return part[0];
}

} // namespace

Complex i0_power(double t, Complex mu) {
    if (t == 0.0) {
        if (mu == Complex(0.0, 0.0)) return {1.0, 0.0};
        if (mu.real() > 0.0) return {0.0, 0.0};
        throw Error(ErrorCode::SingularAtZero, "(t+i0)^mu undefined at t=0 for Re(mu) <= 0");
    }
    double arg = t > 0 ? 0.0 : kPi;
    return std::exp(mu * Complex(std::log(std::abs(t)), arg));
}

Complex minus_it_power(double t, const DerivativeOrder& nu) {
    if (t == 0.0) return {0.0, 0.0}; // Re(nu) > 0
    return std::exp(nu.nu * Complex(std::log(t), -0.5 * kPi));
}

Complex causal_kernel(const DerivativeOrder& nu, Complex w, double t, const MlOptions& opts) {
    require(t >= 0.0, ErrorCode::NegativeTime, "causal kernel requires t >= 0");
    if (t == 0.0 || w == Complex(0.0, 0.0)) {
        if (t == 0.0) return {1.0, 0.0};
        return ml(MlOrder(nu.nu, Complex(1.0, 0.0)), Complex(0.0, 0.0), opts).value;
    }
    Complex z = minus_it_power(t, nu) * w;
    return ml(MlOrder(nu.nu, Complex(1.0, 0.0)), z, opts).value;
}

Complex general_kernel(const DerivativeOrder& nu, int m, Complex w, double t,
                       const MlOptions& opts) {
    require(m >= 0, ErrorCode::InvalidArgument, "m must be >= 0");
    Complex numu = nu.nu - static_cast<double>(m);
    Complex pre = phase_half_pi(numu) * i0_power(t, numu - 1.0); // throws at singular t=0
    Complex z = i0_power(t, nu.nu) * phase_half_pi(nu.nu) * w;
    return pre * ml(MlOrder(nu.nu, numu), z, opts).value;
}

CutWeight canonical_half_weight(double w) {
    require(w > 0.0, ErrorCode::InvalidArgument, "canonical weight requires w > 0");
    CutWeight cw;
    cw.pole_amplitude = {2.0, 0.0};
    cw.cut_density = [w](double s) -> Complex { return {-(w / kPi) / std::sqrt(s), 0.0}; };
    return cw;
}

HalfDecomposition branch_decomposition_half(double w, const CutWeight& weight, double t,
                                            double tol) {
    require(w > 0.0, ErrorCode::InvalidArgument, "requires w > 0");
    require(t > 0.0, ErrorCode::InvalidArgument, "requires t > 0");
    HalfDecomposition out;
    out.onshell = weight.pole_amplitude * std::exp(Complex(0.0, -w * w * t));

    // offshell in u = sqrt(s): int_0^inf 2u rho(u^2)/(u^2+w^2) e^{i t u^2} du,
    // split into equal-phase segments; Euler acceleration sums the far tail.
    auto h = [&](double u) -> Complex {
        double s = u * u;
        return 2.0 * u * weight.cut_density(s) / (s + w * w) *
               std::exp(Complex(0.0, t * s));
    };
    const double s0 = std::max(4.0 * w * w, 8.0 / t);
    const int j0 = static_cast<int>(std::ceil(t * s0 / kPi));
    std::vector<double> pts;
    pts.push_back(0.0);
    double uw = std::sqrt(std::max(0.25 * w * w, 1e-12)); // resolve the density knee near w
    for (int j = 1; j <= j0; ++j) pts.push_back(std::sqrt(static_cast<double>(j) * kPi / t));
    if (uw < pts.back()) pts.push_back(uw);
    std::sort(pts.begin(), pts.end());
    quad::QuadResult head = quad::adaptive_gk_segments(h, pts, 0.2 * tol, 6000);

    const int n_tail_segments = 48;
    std::vector<Complex> segs;
    segs.reserve(n_tail_segments);
    double quad_err = head.error;
    for (int j = j0; j < j0 + n_tail_segments; ++j) {
        double ua = std::sqrt(static_cast<double>(j) * kPi / t);
        double ub = std::sqrt(static_cast<double>(j + 1) * kPi / t);
        quad::QuadResult q = quad::adaptive_gk(h, ua, ub, 0.01 * tol, 40);
        segs.push_back(q.value);
        quad_err += q.error;
    }
    Complex tail = euler_accelerate(segs);
    // Euler residue estimate: magnitude of the last accelerated correction
    double euler_err = std::abs(segs.back()) * std::pow(0.5, n_tail_segments / 2);
    out.offshell = head.value + tail;
    out.quad_error = quad_err + euler_err;
    if (!(out.quad_error <= 50.0 * tol))
        throw Error(ErrorCode::QuadratureFailure, "off-shell cut integral did not settle");
    return out;
}

HalfDecomposition decompose_causal_half(double w, double t, double tol, CutQuadrature rule) {
    require(w >= 0.0, ErrorCode::InvalidArgument, "requires w >= 0");
    require(t > 0.0, ErrorCode::InvalidArgument, "requires t > 0");
    HalfDecomposition out;
    if (w == 0.0) { // E(0) = 1 split by continuity in w
        out.onshell = {2.0, 0.0};
        out.offshell = {-1.0, 0.0};
        return out;
    }
    if (rule == CutQuadrature::RealAxisSegments)
        return branch_decomposition_half(w, canonical_half_weight(w), t, tol);

    out.onshell = 2.0 * std::exp(Complex(0.0, -w * w * t));
    // cut integral rotated to s = i v^2:
    //   offshell = -(2w/pi) i e^{-i pi/4} int_0^inf e^{-t v^2} / (w^2 + i v^2) dv
    auto f = [&](double v) -> Complex {
        return std::exp(-t * v * v) / Complex(w * w, v * v);
    };
    double vmax = std::sqrt(46.0 / t);
    std::vector<double> pts{0.0};
    if (w < vmax) pts.push_back(w);
    pts.push_back(vmax);
    quad::QuadResult q = quad::adaptive_gk_segments(f, pts, 0.05 * tol * kPi / (2.0 * w), 4000);
    double tail = std::exp(-46.0) / (w * w);
    Complex rot = -(2.0 * w / kPi) * kI * std::exp(Complex(0.0, -kPi / 4.0)) * q.value;
    out.offshell = rot;
    out.quad_error = (q.error + tail) * (2.0 * w / kPi);
    if (!(out.quad_error <= 50.0 * tol))
        throw Error(ErrorCode::QuadratureFailure, "rotated cut integral did not settle");
    return out;
}

} // namespace fse
