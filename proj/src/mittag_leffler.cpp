#include "fse/mittag_leffler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "fse/complex_gamma.hpp"
#include "fse/quadrature.hpp"
#include "ml_internal.hpp"

namespace fse {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEps = std::numeric_limits<double>::epsilon();

struct KahanSum {
    Complex s{0.0, 0.0};
    Complex c{0.0, 0.0};
    void add(Complex x) {
        Complex y = x - c;
        Complex t = s + y;
        c = (t - s) - y;
        s = t;
    }
};

// Magnitude ratio |t_{n+1}/t_n| = |z| * |Gamma(a n + b)| / |Gamma(a(n+1) + b)|.
double term_ratio(Complex alpha, Complex beta, double abs_z, int n) {
    double l0 = log_abs_gamma(alpha * static_cast<double>(n) + beta);
    double l1 = log_abs_gamma(alpha * static_cast<double>(n + 1) + beta);
    if (!std::isfinite(l0) || !std::isfinite(l1)) return std::numeric_limits<double>::infinity();
    double d = std::log(abs_z) + l0 - l1;
    if (d > 700.0) return std::numeric_limits<double>::infinity();
    return std::exp(d) * (1.0 + 1e-12);
}

// Certified geometric tail after the term of magnitude abs_t at index n,
// or +inf when the ratio is not yet contracting.
double geometric_tail(Complex alpha, Complex beta, double abs_z, int n, double abs_t) {
    double r = term_ratio(alpha, beta, abs_z, n);
    double r2 = term_ratio(alpha, beta, abs_z, n + 1);
    if (!(r < 0.95) || !(r2 <= r * (1.0 + 1e-9)))
        return std::numeric_limits<double>::infinity();
    return abs_t * r / (1.0 - r);
}

struct TaylorOutcome {
    Complex value{0.0, 0.0};
    double bound = std::numeric_limits<double>::infinity();
    bool certified = false;
    int terms = 0;
};

// Internal certified-double series engine for ml(). Tracks a rounding majorant
// so the reported bound includes cancellation loss.
TaylorOutcome taylor_certified(Complex alpha, Complex beta, Complex z, double tol,
                               int max_terms) {
    const double abs_z = std::abs(z);
    const bool real_params = alpha.imag() == 0.0 && beta.imag() == 0.0;
    const double eps_g = real_params ? 4.0 * kEps : 4e-13;
    TaylorOutcome out;
    KahanSum sum;
    Complex zp{1.0, 0.0};
    double majorant = 0.0;
    double round_acc = 0.0;
    double peak_at = 0.0;
    for (int n = 0; n < max_terms; ++n) {
        Complex t = zp * crgamma(alpha * static_cast<double>(n) + beta);
        double at = std::abs(t);
        if (!std::isfinite(at) || at > 1e280) return out; // overflow: give up on this path
        sum.add(t);
        majorant += at;
        round_acc += at * (static_cast<double>(n) * kEps + eps_g);
        peak_at = std::max(peak_at, at);
        zp *= z;
        if (std::abs(zp) > 1e290) return out;
        out.terms = n + 1;
        // rounding loss only grows; once past the peak it decides certifiability
        if (at < 0.125 * peak_at &&
            round_acc > 4.0 * std::max(tol, tol * (std::abs(sum.s) + at)))
            return out;
        if (n >= 2 && at <= std::max(tol, tol * std::abs(sum.s))) {
            double next = std::abs(zp) * std::abs(crgamma(alpha * static_cast<double>(n + 1) + beta));
            double tail = geometric_tail(alpha, beta, abs_z, n + 1, next) + next;
            if (std::isfinite(tail)) {
                double target = std::max(tol, tol * std::abs(sum.s)) * 0.5;
                if (tail <= target) {
                    out.value = sum.s;
                    out.bound = tail + round_acc + 2.0 * kEps * majorant;
                    out.certified = true;
                    return out;
                }
            }
        }
    }
    out.value = sum.s;
    out.bound = std::numeric_limits<double>::infinity();
    return out;
}

struct AsymOutcome {
    Complex value{0.0, 0.0};
    double err = std::numeric_limits<double>::infinity();
    bool ok = false;
};

// Exponential-plus-algebraic expansion for real alpha in (0, 2].
// Roots z^{1/alpha} e^{2 pi i s/alpha} enter with weight 1 inside
// |arg z + 2 pi s| < alpha pi and weight 1/2 on the boundary.
AsymOutcome asymptotic_eval(double alpha, Complex beta, Complex z, int p_max) {
    AsymOutcome out;
    const double r = std::abs(z);
    const double th = std::arg(z);
    const double root_mag = std::pow(r, 1.0 / alpha);

    Complex exp_part{0.0, 0.0};
    double exp_majorant = 0.0;
    for (int s = -1; s <= 1; ++s) {
        double ang = th + 2.0 * kPi * s;
        double lim = alpha * kPi;
        double wgt = 0.0;
        if (std::abs(ang) < lim - 1e-9)
            wgt = 1.0;
        else if (std::abs(std::abs(ang) - lim) <= 1e-9)
            wgt = 0.5;
        if (wgt == 0.0) continue;
        Complex wlog{std::log(r) / alpha, ang / alpha};
        Complex expo = (1.0 - beta) * wlog + std::exp(wlog);
        if (expo.real() > 705.0) return out; // value overflows double
        Complex c = (wgt / alpha) * std::exp(expo);
        exp_part += c;
        exp_majorant += std::abs(c);
    }

    Complex alg{0.0, 0.0};
    double alg_majorant = 0.0;
    double prev_mag = std::numeric_limits<double>::infinity();
    double first_omitted = 0.0;
    Complex zinv = 1.0 / z;
    Complex zp = zinv;
    int used = 0;
    for (int k = 1; k <= p_max; ++k) {
        Complex term = -zp * crgamma(beta - alpha * static_cast<double>(k));
        double mag = std::abs(term);
        if (mag > prev_mag) { // divergent zone reached
            first_omitted = mag;
            break;
        }
        alg += term;
        alg_majorant += mag;
        if (mag > 0.0) prev_mag = mag;
        zp *= zinv;
        ++used;
        first_omitted = std::abs(zp) * std::abs(crgamma(beta - alpha * static_cast<double>(k + 1)));
    }
    (void)used;

    out.value = exp_part + alg;
    out.err = first_omitted + kEps * (4.0 + root_mag) * exp_majorant + 4.0 * kEps * alg_majorant;
    out.ok = true;
    return out;
}

double looser_target(double tol, double abs_value) {
    return std::max(tol, tol * abs_value);
}

} // namespace

const char* ml_method_name(MlMethod m) {
    switch (m) {
        case MlMethod::TaylorSeries: return "taylor_series";
        case MlMethod::Asymptotic: return "asymptotic";
        case MlMethod::Quadrature: return "quadrature";
    }
    return "unknown";
}

MlResult ml_series(const MlOrder& order, Complex z, int max_terms, double tol) {
    require(max_terms >= 1, ErrorCode::InvalidArgument, "max_terms must be >= 1");
    const Complex a = order.alpha, b = order.beta;
    const double abs_z = std::abs(z);
    MlResult res;
    res.method = MlMethod::TaylorSeries;
    if (abs_z == 0.0) {
        res.value = crgamma(b);
        res.abs_error_bound = 4.0 * kEps * std::abs(res.value);
        return res;
    }
    Complex sum{0.0, 0.0};
    Complex comp{0.0, 0.0}; // Kahan compensation
    Complex zp{1.0, 0.0};
    double majorant = 0.0;
    for (int n = 0; n < max_terms; ++n) {
        Complex t = zp * crgamma(a * static_cast<double>(n) + b);
        double at = std::abs(t);
        if (!std::isfinite(at) || at > 1e280)
            throw MlNonConvergent({sum, std::numeric_limits<double>::infinity(), MlMethod::TaylorSeries},
                                  "ml_series: terms overflow double range");
        Complex y = t - comp;
        Complex s2 = sum + y;
        comp = (s2 - sum) - y;
        sum = s2;
        majorant += at;
        zp *= z;
        if (std::abs(zp) > 1e290)
            throw MlNonConvergent({sum, std::numeric_limits<double>::infinity(), MlMethod::TaylorSeries},
                                  "ml_series: power overflows double range");
        if (n >= 1) {
            double next = std::abs(zp) * std::abs(crgamma(a * static_cast<double>(n + 1) + b));
            double tail = geometric_tail(a, b, abs_z, n + 1, next) + next;
            if (std::isfinite(tail)) {
                double rounding = majorant * (static_cast<double>(n) + 8.0) * kEps;
                double bound = tail + rounding;
                if (bound <= looser_target(tol, std::abs(sum))) {
                    res.value = sum;
                    res.abs_error_bound = bound;
                    return res;
                }
            }
        }
    }
    // ran out of budget: report the best bound we can still certify
    double next = std::abs(zp) * std::abs(crgamma(a * static_cast<double>(max_terms) + b));
    double tail = geometric_tail(a, b, abs_z, max_terms, next) + next;
    double bound = tail + majorant * (static_cast<double>(max_terms) + 8.0) * kEps;
    res.value = sum;
    res.abs_error_bound = bound;
    if (!(bound <= looser_target(tol, std::abs(sum))))
        throw MlNonConvergent(res, "ml_series: tail bound not certified below target at max_terms");
    return res;
}

MlResult ml_asymptotic(const MlOrder& order, Complex z, int num_terms, const MlOptions& opts) {
    require(order.alpha.imag() == 0.0, ErrorCode::InvalidArgument,
            "ml_asymptotic requires real alpha");
    double alpha = order.alpha.real();
    require(alpha > 0 && alpha <= 2.0, ErrorCode::InvalidArgument,
            "ml_asymptotic requires alpha in (0, 2]");
    require(std::abs(z) >= opts.crossover_radius, ErrorCode::InvalidArgument,
            "ml_asymptotic requires |z| >= crossover radius");
    require(num_terms >= 1, ErrorCode::InvalidArgument, "num_terms must be >= 1");
    AsymOutcome a = asymptotic_eval(alpha, order.beta, z, num_terms);
    if (!a.ok)
        throw Error(ErrorCode::SectorUnsupported,
                    "asymptotic expansion overflows or is undefined at this z");
    MlResult res{a.value, a.err, MlMethod::Asymptotic};
    if (!(a.err <= looser_target(opts.tolerance, std::abs(a.value))))
        throw Error(ErrorCode::SectorUnsupported,
                    "asymptotic certificate exceeds tolerance in this sector");
    return res;
}

MlResult ml(const MlOrder& order, Complex z, const MlOptions& opts) {
    const Complex a = order.alpha, b = order.beta;
    const double abs_z = std::abs(z);
    const double tol = opts.tolerance;

    if (abs_z == 0.0) {
        MlResult res;
        res.value = crgamma(b);
        res.abs_error_bound = 4.0 * kEps * std::abs(res.value);
        res.method = MlMethod::TaylorSeries;
        return res;
    }

    const bool alpha_real = a.imag() == 0.0;
    const bool asym_eligible = alpha_real && a.real() <= 2.0;
    const double root_mag = std::exp(std::min(705.0, std::log(abs_z) / a.real()));

    MlResult best;
    best.abs_error_bound = std::numeric_limits<double>::infinity();

    auto try_taylor = [&]() -> bool {
        if (root_mag > 650.0) return false; // majorant overflows double
        double n_peak = root_mag / a.real();
        if (n_peak > 0.8 * static_cast<double>(opts.max_terms)) return false;
        TaylorOutcome t = taylor_certified(a, b, z, tol, opts.max_terms);
        if (t.certified && t.bound <= looser_target(tol, std::abs(t.value))) {
            best = {t.value, t.bound, MlMethod::TaylorSeries};
            return true;
        }
        if (t.bound < best.abs_error_bound) best = {t.value, t.bound, MlMethod::TaylorSeries};
        return false;
    };
    auto try_asym = [&]() -> bool {
        if (!asym_eligible) return false;
        // attempt beyond the crossover radius, or earlier once the exponential
        // scale is large enough for the algebraic tail to contract
        if (root_mag < 25.0 && abs_z < opts.crossover_radius) return false;
        AsymOutcome o = asymptotic_eval(a.real(), b, z, opts.asymptotic_terms);
        if (!o.ok) return false;
        if (o.err <= looser_target(tol, std::abs(o.value))) {
            best = {o.value, o.err, MlMethod::Asymptotic};
            return true;
        }
        if (o.err < best.abs_error_bound) best = {o.value, o.err, MlMethod::Asymptotic};
        return false;
    };

    if (abs_z >= opts.crossover_radius) {
        if (try_asym()) return best;
        if (try_taylor()) return best;
    } else {
        if (try_taylor()) return best;
        if (try_asym()) return best;
    }

    detail::BigSeriesResult big = detail::ml_bigfloat_series(a, b, z, tol, opts.max_terms);
    if (big.ok && big.bound <= looser_target(tol, std::abs(big.value)))
        return {big.value, big.bound, MlMethod::TaylorSeries};
    if (big.ok && big.bound < best.abs_error_bound)
        best = {big.value, big.bound, MlMethod::TaylorSeries};

    throw MlNonConvergent(best, "ml: no evaluation path certified the requested tolerance");
}

double laplace_identity_residual(const MlOrder& order, Complex mu, Complex z,
                                 int quad_points, double tol) {
    const Complex a = order.alpha, b = order.beta;
    require(mu.real() > 0, ErrorCode::InvalidArgument, "Re(mu) must be > 0");
    Complex mu_a = std::pow(mu, a);
    require(std::abs(z) < std::abs(mu_a), ErrorCode::InvalidArgument,
            "requires |z| < |mu^alpha|");
    const Complex rhs = std::pow(mu, a - b) / (mu_a - z);

    // Integrand magnitude ~ exp(-(Re mu - |z|^{1/Re a}) x): need positive decay.
    const double growth = std::pow(std::abs(z), 1.0 / a.real());
    const double decay = mu.real() - growth;
    if (!(decay > 1e-3))
        throw Error(ErrorCode::QuadratureFailure,
                    "laplace identity: tail decay rate too small for truncation");

    double x_max = (45.0 + std::max(0.0, (b.real() - 1.0)) * 8.0) / decay;
    double tail_est = std::exp(-decay * x_max) *
                      std::pow(x_max, std::max(0.0, b.real() - 1.0)) * (2.0 / a.real() + 2.0);
    double target = tol * std::abs(rhs);
    if (!(tail_est <= target))
        throw Error(ErrorCode::QuadratureFailure, "laplace identity: tail estimate exceeds tolerance");

    MlOptions mlo;
    mlo.tolerance = 1e-13;
    auto f = [&](double x) -> Complex {
        Complex xa = std::pow(Complex(x, 0.0), a);
        Complex e = ml(order, xa * z, mlo).value;
        Complex pw = std::exp((b - 1.0) * std::log(x));
        return std::exp(-mu * x) * pw * e;
    };
    int max_level = 6;
    while ((1 << (max_level + 3)) < quad_points && max_level < 13) ++max_level;
    quad::QuadResult q = quad::tanh_sinh_0b(f, x_max, 0.1 * target, max_level);
    if (!(q.error + tail_est <= 10.0 * target))
        throw Error(ErrorCode::QuadratureFailure, "laplace identity: quadrature did not settle");
    return std::abs(q.value - rhs) / std::abs(rhs);
}

} // namespace fse
