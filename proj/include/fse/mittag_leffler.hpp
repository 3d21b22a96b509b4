#ifndef FSE_MITTAG_LEFFLER_HPP
#define FSE_MITTAG_LEFFLER_HPP

#include <complex>

#include "fse/errors.hpp"

namespace fse {

using Complex = std::complex<double>;

/// Order pair (alpha, beta) of E_{alpha,beta}; construction enforces Re(alpha) > 0.
struct MlOrder {
    Complex alpha;
    Complex beta;

    MlOrder(Complex a, Complex b) : alpha(a), beta(b) {
        require(alpha.real() > 0, ErrorCode::InvalidOrder, "Re(alpha) must be > 0");
    }
    MlOrder(double a, double b) : MlOrder(Complex(a, 0.0), Complex(b, 0.0)) {}
};

enum class MlMethod { TaylorSeries, Asymptotic, Quadrature };

const char* ml_method_name(MlMethod m);

struct MlResult {
    Complex value{0.0, 0.0};
    double abs_error_bound = 0.0;
    MlMethod method = MlMethod::TaylorSeries;
};

struct MlOptions {
    /// Absolute-or-relative target, whichever is looser at the evaluation point.
    double tolerance = 1e-12;
    /// Series iteration budget (shared by the plain and extended-precision paths).
    int max_terms = 100000;
    /// |z| at and beyond which the asymptotic expansion is the preferred method
    /// (real alpha in (0,2] only). Below it the expansion is still consulted when
    /// plain double summation cannot certify the tolerance.
    double crossover_radius = 50.0;
    /// Cap on algebraic terms of the asymptotic expansion.
    int asymptotic_terms = 24;
};

/// Thrown when no evaluation path certifies the requested tolerance; carries the
/// best value obtained and the bound actually achieved.
class MlNonConvergent : public Error {
public:
    MlNonConvergent(const MlResult& best, const std::string& what)
        : Error(ErrorCode::NonConvergent, what), best_(best) {}
    const MlResult& best() const noexcept { return best_; }

private:
    MlResult best_;
};

/// E_{alpha,beta}(z) with a certified absolute error bound.
///
/// Dispatch: certified double Taylor summation where cancellation permits,
/// sector-aware exponential-plus-algebraic asymptotics for real alpha in (0,2]
/// when their first-omitted-term certificate meets the tolerance, and an
/// extended-precision series fallback otherwise. Method selection is a pure
/// function of the inputs.
MlResult ml(const MlOrder& order, Complex z, const MlOptions& opts = {});

/// Plain truncated Taylor sum with a rigorous tail bound; the reference/oracle
/// path, implemented independently of ml()'s internal series engine.
/// Throws MlNonConvergent when the bound cannot be certified below the target
/// within max_terms.
MlResult ml_series(const MlOrder& order, Complex z, int max_terms, double tol = 1e-12);

/// Sector-aware asymptotic value for real alpha in (0,2], |z| >= crossover
/// radius. num_terms caps the algebraic part; the bound is estimated by the
/// first omitted term. Throws SectorUnsupported (ErrorCode) when the expansion
/// cannot be certified at this z.
MlResult ml_asymptotic(const MlOrder& order, Complex z, int num_terms,
                       const MlOptions& opts = {});

/// Relative residual of the Laplace-transform identity
///   int_0^inf e^{-mu x} x^{beta-1} E_{alpha,beta}(x^alpha z) dx
///     = mu^{alpha-beta} / (mu^alpha - z),
/// computed by a truncated tanh-sinh rule on [0, X_max] with an exponential
/// tail estimate. quad_points caps the number of abscissae.
double laplace_identity_residual(const MlOrder& order, Complex mu, Complex z,
                                 int quad_points = 2000, double tol = 1e-8);

} // namespace fse

#endif
