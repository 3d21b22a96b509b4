#include "ml_internal.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <vector>

#include "fse/complex_gamma.hpp"

namespace fse::detail {

namespace {

// mpfr caches constants per thread; release them when the thread dies so
// leak checkers stay quiet
struct MpfrCacheJanitor {
    ~MpfrCacheJanitor() { mpfr_free_cache(); }
};

constexpr long kMaxPrecision = 65536;
constexpr long kMaxPrecisionComplexGamma = 4096; // Spouge cost grows linearly with digits

// Minimal RAII wrapper; just enough arithmetic for the series loop.
class Mp {
public:
    explicit Mp(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Mp(const Mp& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Mp& operator=(const Mp& o) {
        if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }
    ~Mp() { mpfr_clear(v_); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

private:
    mpfr_t v_;
};

struct Cmp { // complex pair at shared precision
    Mp re, im;
    explicit Cmp(mpfr_prec_t p) : re(p), im(p) {}
};

void cmul(Cmp& out, const Cmp& a, const Cmp& b, Mp& t1, Mp& t2) {
    // out = a*b; out may not alias a or b
    mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_sub(out.re.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_mul(t1.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(out.im.get(), t1.get(), t2.get(), MPFR_RNDN);
}

void cdiv(Cmp& out, const Cmp& a, const Cmp& b, Mp& t1, Mp& t2, Mp& den) {
    mpfr_mul(t1.get(), b.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), b.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_add(den.get(), t1.get(), t2.get(), MPFR_RNDN);
    // out = a * conj(b) / den
    mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_add(out.re.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_div(out.re.get(), out.re.get(), den.get(), MPFR_RNDN);
    mpfr_mul(t1.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_sub(out.im.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_div(out.im.get(), out.im.get(), den.get(), MPFR_RNDN);
}

// exp(x + iy) into out
void cexp(Cmp& out, const Cmp& w, Mp& t1) {
    mpfr_exp(t1.get(), w.re.get(), MPFR_RNDN);
    mpfr_cos(out.re.get(), w.im.get(), MPFR_RNDN);
    mpfr_sin(out.im.get(), w.im.get(), MPFR_RNDN);
    mpfr_mul(out.re.get(), out.re.get(), t1.get(), MPFR_RNDN);
    mpfr_mul(out.im.get(), out.im.get(), t1.get(), MPFR_RNDN);
}

// log(x + iy) into out (principal)
void clog(Cmp& out, const Cmp& w, Mp& t1, Mp& t2) {
    mpfr_hypot(t1.get(), w.re.get(), w.im.get(), MPFR_RNDN);
    mpfr_log(t2.get(), t1.get(), MPFR_RNDN);
    mpfr_atan2(out.im.get(), w.im.get(), w.re.get(), MPFR_RNDN);
    mpfr_set(out.re.get(), t2.get(), MPFR_RNDN);
}

// Spouge coefficients and evaluation of Gamma(w) for complex w, Re(w+a) > 0.
// The coefficient sum cancels to O(1) from terms of size up to ~exp(a/2), so
// everything runs at a working precision inflated by that loss.
class SpougeGamma {
public:
    SpougeGamma(mpfr_prec_t target_prec) {
        double digits = static_cast<double>(target_prec) * 0.30103;
        a_ = static_cast<long>(std::ceil(1.2528 * (digits + 4.0))) + 1;
        double ln_cmax = 0.0;
        for (long k = 1; k < a_; ++k) {
            double lc = (static_cast<double>(k) - 0.5) * std::log(static_cast<double>(a_ - k)) +
                        static_cast<double>(a_ - k) - std::lgamma(static_cast<double>(k));
            ln_cmax = std::max(ln_cmax, lc);
        }
        prec_ = target_prec + static_cast<mpfr_prec_t>(ln_cmax / 0.6931471805599453) + 24;
        const mpfr_prec_t prec = prec_;
        coeffs_.reserve(static_cast<size_t>(a_));
        Mp fact(prec), base(prec), t1(prec), t2(prec);
        mpfr_set_ui(fact.get(), 1, MPFR_RNDN);
        for (long k = 0; k < a_; ++k) {
            Mp c(prec);
            if (k == 0) {
                mpfr_const_pi(t1.get(), MPFR_RNDN);
                mpfr_mul_ui(t1.get(), t1.get(), 2, MPFR_RNDN);
                mpfr_sqrt(c.get(), t1.get(), MPFR_RNDN);
            } else {
                if (k > 1) mpfr_mul_ui(fact.get(), fact.get(), static_cast<unsigned long>(k - 1), MPFR_RNDN);
                mpfr_set_si(base.get(), a_ - k, MPFR_RNDN); // a - k > 0
                mpfr_set_d(t1.get(), static_cast<double>(k) - 0.5, MPFR_RNDN);
                mpfr_pow(t2.get(), base.get(), t1.get(), MPFR_RNDN); // (a-k)^{k-1/2}
                mpfr_exp(t1.get(), base.get(), MPFR_RNDN);           // e^{a-k}
                mpfr_mul(c.get(), t2.get(), t1.get(), MPFR_RNDN);
                mpfr_div(c.get(), c.get(), fact.get(), MPFR_RNDN);
                if (k % 2 == 0) mpfr_neg(c.get(), c.get(), MPFR_RNDN);
            }
            coeffs_.push_back(std::move(c));
        }
    }

    // gamma(w), w = (wr, wi)
    void eval(Cmp& out, const Cmp& w) const {
        mpfr_prec_t p = prec_;
        Cmp u(p), s(p), term(p), den(p), lg(p), tmp(p);
        Mp t1(p), t2(p), t3(p);
        mpfr_sub_ui(u.re.get(), w.re.get(), 1, MPFR_RNDN);
        mpfr_set(u.im.get(), w.im.get(), MPFR_RNDN);
        // s = c0 + sum c_k / (u + k)
        mpfr_set(s.re.get(), coeffs_[0].get(), MPFR_RNDN);
        mpfr_set_zero(s.im.get(), 1);
        for (long k = 1; k < a_; ++k) {
            mpfr_add_ui(den.re.get(), u.re.get(), static_cast<unsigned long>(k), MPFR_RNDN);
            mpfr_set(den.im.get(), u.im.get(), MPFR_RNDN);
            Cmp ck(p);
            mpfr_set(ck.re.get(), coeffs_[static_cast<size_t>(k)].get(), MPFR_RNDN);
            mpfr_set_zero(ck.im.get(), 1);
            cdiv(term, ck, den, t1, t2, t3);
            mpfr_add(s.re.get(), s.re.get(), term.re.get(), MPFR_RNDN);
            mpfr_add(s.im.get(), s.im.get(), term.im.get(), MPFR_RNDN);
        }
        // lg = (u + 1/2) log(u + a) - (u + a)
        Cmp ua(p), lua(p), half(p);
        mpfr_add_si(ua.re.get(), u.re.get(), a_, MPFR_RNDN);
        mpfr_set(ua.im.get(), u.im.get(), MPFR_RNDN);
        clog(lua, ua, t1, t2);
        mpfr_set_d(half.re.get(), 0.5, MPFR_RNDN);
        mpfr_add(half.re.get(), half.re.get(), u.re.get(), MPFR_RNDN);
        mpfr_set(half.im.get(), u.im.get(), MPFR_RNDN);
        cmul(lg, half, lua, t1, t2);
        mpfr_sub(lg.re.get(), lg.re.get(), ua.re.get(), MPFR_RNDN);
        mpfr_sub(lg.im.get(), lg.im.get(), ua.im.get(), MPFR_RNDN);
        cexp(tmp, lg, t1);
        cmul(out, tmp, s, t1, t2);
    }

private:
    mpfr_prec_t prec_;
    long a_ = 0;
    std::vector<Mp> coeffs_;
};

struct Plan {
    bool feasible = false;
    int n_end = 0;
    double peak_ln = 0.0;
    long precision = 0;
};

Plan plan_series(Complex alpha, Complex beta, Complex z, double tol, int max_terms) {
    Plan plan;
    const double lz = std::log(std::abs(z));
    const double ln_floor = std::log(std::max(tol, 1e-300)) + std::log(0.02);
    double peak = 0.0;
    double prev = -std::numeric_limits<double>::infinity();
    int descent = 0;
    // scan in strides to keep planning cheap for long series
    int stride = std::max(1, max_terms / 20000);
    for (int n = 0; n <= max_terms; n += stride) {
        double lg = log_abs_gamma(alpha * static_cast<double>(n) + beta);
        double lt = std::isfinite(lg) ? static_cast<double>(n) * lz - lg
                                      : -std::numeric_limits<double>::infinity();
        peak = std::max(peak, lt);
        if (lt < prev) ++descent; else descent = 0;
        prev = lt;
        if (descent >= 2 && lt < ln_floor) {
            plan.feasible = true;
            plan.n_end = n;
            break;
        }
    }
    if (!plan.feasible) return plan;
    plan.peak_ln = peak;
    double need_bits = (peak - ln_floor) / 0.6931471805599453;
    plan.precision = static_cast<long>(need_bits) + static_cast<long>(std::log2(plan.n_end + 2.0)) + 24;
    plan.precision = std::max(plan.precision, 96L);
    return plan;
}

} // namespace

BigSeriesResult ml_bigfloat_series(Complex alpha, Complex beta, Complex z, double tol,
                                   int max_terms) {
    thread_local MpfrCacheJanitor janitor;
    (void)janitor;
    BigSeriesResult out;
    const bool real_params = alpha.imag() == 0.0 && beta.imag() == 0.0;

    Plan plan = plan_series(alpha, beta, z, tol, max_terms);
    if (!plan.feasible) return out;
    if (plan.precision > kMaxPrecision) return out;
    if (!real_params && plan.precision > kMaxPrecisionComplexGamma) return out;
    const mpfr_prec_t p = static_cast<mpfr_prec_t>(plan.precision);

    Cmp sum(p), zp(p), zc(p), term(p), arg(p), g(p), tmp(p);
    Mp t1(p), t2(p), t3(p), lg(p);
    mpfr_set_d(zc.re.get(), z.real(), MPFR_RNDN);
    mpfr_set_d(zc.im.get(), z.imag(), MPFR_RNDN);
    mpfr_set_ui(zp.re.get(), 1, MPFR_RNDN);

    std::unique_ptr<SpougeGamma> spouge;
    if (!real_params) spouge = std::make_unique<SpougeGamma>(p);

    const int n_end = plan.n_end;
    for (int n = 0; n <= n_end; ++n) {
        // arg = alpha*n + beta (exact inputs, rounded once at precision p)
        mpfr_set_d(arg.re.get(), alpha.real(), MPFR_RNDN);
        mpfr_mul_ui(arg.re.get(), arg.re.get(), static_cast<unsigned long>(n), MPFR_RNDN);
        mpfr_add_d(arg.re.get(), arg.re.get(), beta.real(), MPFR_RNDN);
        mpfr_set_d(arg.im.get(), alpha.imag(), MPFR_RNDN);
        mpfr_mul_ui(arg.im.get(), arg.im.get(), static_cast<unsigned long>(n), MPFR_RNDN);
        mpfr_add_d(arg.im.get(), arg.im.get(), beta.imag(), MPFR_RNDN);

        bool zero_term = false;
        if (real_params) {
            if (mpfr_sgn(arg.re.get()) <= 0 && mpfr_integer_p(arg.re.get())) {
                zero_term = true;
            } else {
                int sign = 0;
                mpfr_lgamma(lg.get(), &sign, arg.re.get(), MPFR_RNDN);
                mpfr_neg(lg.get(), lg.get(), MPFR_RNDN);
                mpfr_exp(t1.get(), lg.get(), MPFR_RNDN);
                if (sign < 0) mpfr_neg(t1.get(), t1.get(), MPFR_RNDN);
                mpfr_mul(term.re.get(), zp.re.get(), t1.get(), MPFR_RNDN);
                mpfr_mul(term.im.get(), zp.im.get(), t1.get(), MPFR_RNDN);
            }
        } else {
            spouge->eval(g, arg);
            cdiv(term, zp, g, t1, t2, t3);
        }
        if (!zero_term) {
            mpfr_add(sum.re.get(), sum.re.get(), term.re.get(), MPFR_RNDN);
            mpfr_add(sum.im.get(), sum.im.get(), term.im.get(), MPFR_RNDN);
        }
        cmul(tmp, zp, zc, t1, t2);
        zp = tmp;
        out.terms = n + 1;
    }

    // geometric tail certificate from the magnitude scan
    const double lz = std::log(std::abs(z));
    auto lt_at = [&](int n) {
        double lgn = log_abs_gamma(alpha * static_cast<double>(n) + beta);
        return std::isfinite(lgn) ? static_cast<double>(n) * lz - lgn
                                  : -std::numeric_limits<double>::infinity();
    };
    double l_end = lt_at(n_end + 1);
    double r = std::exp(lt_at(n_end + 2) - l_end);
    double tail;
    if (r < 0.95)
        tail = std::exp(l_end) / (1.0 - r) * 1.01;
    else
        tail = std::numeric_limits<double>::infinity();

    double round_ln = plan.peak_ln - 0.6931471805599453 * (static_cast<double>(p) - 4.0) +
                      std::log(static_cast<double>(n_end) + 2.0);
    double rounding = round_ln < -700.0 ? 0.0 : std::exp(round_ln);

    out.value = Complex(mpfr_get_d(sum.re.get(), MPFR_RNDN), mpfr_get_d(sum.im.get(), MPFR_RNDN));
    if (!std::isfinite(out.value.real()) || !std::isfinite(out.value.imag())) return out;
    out.bound = tail + rounding + 2e-16 * std::abs(out.value);
    out.precision_bits = plan.precision;
    out.ok = std::isfinite(out.bound);
    return out;
}

} // namespace fse::detail
