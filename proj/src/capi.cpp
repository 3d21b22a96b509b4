#include "fse.h"

#include <cstring>
#include <string>
#include <vector>

#include "fse/frac_calc.hpp"
#include "fse/free_particle.hpp"
#include "fse/green.hpp"
#include "fse/kernels.hpp"
#include "fse/mittag_leffler.hpp"
#include "fse/potential_well.hpp"

struct fse_spectrum {
    fse::MomentumSpectrum impl;
};

struct fse_field {
    fse::SpaceTimeField impl;
};

namespace {

thread_local std::string g_last_error;

fse_status map_code(fse::ErrorCode code) {
    using fse::ErrorCode;
    switch (code) {
        case ErrorCode::InvalidArgument: return FSE_ERR_INVALID_ARGUMENT;
        case ErrorCode::InvalidOrder: return FSE_ERR_INVALID_ORDER;
        case ErrorCode::NonConvergent: return FSE_ERR_NON_CONVERGENT;
        case ErrorCode::SectorUnsupported: return FSE_ERR_SECTOR_UNSUPPORTED;
        case ErrorCode::SingularAtZero: return FSE_ERR_SINGULAR_AT_ZERO;
        case ErrorCode::QuadratureFailure: return FSE_ERR_QUADRATURE_FAILURE;
        case ErrorCode::GridTooNarrow: return FSE_ERR_GRID_TOO_NARROW;
        case ErrorCode::EdgeDecayViolation: return FSE_ERR_EDGE_DECAY;
        case ErrorCode::BoundaryViolation: return FSE_ERR_BOUNDARY;
        case ErrorCode::OriginSingularity: return FSE_ERR_ORIGIN_SINGULARITY;
        case ErrorCode::UnsupportedLambda: return FSE_ERR_UNSUPPORTED_LAMBDA;
        case ErrorCode::NegativeTime: return FSE_ERR_NEGATIVE_TIME;
        case ErrorCode::ZeroTimeSeparation: return FSE_ERR_ZERO_TIME_SEPARATION;
    }
    return FSE_ERR_INTERNAL;
}

fse::Complex to_cpp(fse_complex z) { return {z.re, z.im}; }
fse_complex to_c(fse::Complex z) { return {z.real(), z.imag()}; }

template <typename Fn>
fse_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        fn();
        return FSE_OK;
    } catch (const fse::Error& e) {
        g_last_error = e.what();
        return map_code(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return FSE_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return FSE_ERR_INTERNAL;
    }
}

fse::MlOptions options_for(double tol) {
    fse::MlOptions opts;
    if (tol > 0.0) opts.tolerance = tol;
    return opts;
}

std::vector<double> copy_span(const double* p, size_t n) { return {p, p + n}; }

} // namespace

extern "C" {

const char* fse_version(void) { return "0.1.0"; }

const char* fse_status_name(fse_status status) {
    switch (status) {
        case FSE_OK: return "ok";
        case FSE_ERR_INVALID_ARGUMENT: return "invalid_argument";
        case FSE_ERR_INVALID_ORDER: return "invalid_order";
        case FSE_ERR_NON_CONVERGENT: return "non_convergent";
        case FSE_ERR_SECTOR_UNSUPPORTED: return "sector_unsupported";
        case FSE_ERR_SINGULAR_AT_ZERO: return "singular_at_zero";
        case FSE_ERR_QUADRATURE_FAILURE: return "quadrature_failure";
        case FSE_ERR_GRID_TOO_NARROW: return "grid_too_narrow";
        case FSE_ERR_EDGE_DECAY: return "edge_decay_violation";
        case FSE_ERR_BOUNDARY: return "boundary_violation";
        case FSE_ERR_ORIGIN_SINGULARITY: return "origin_singularity";
        case FSE_ERR_UNSUPPORTED_LAMBDA: return "unsupported_lambda";
        case FSE_ERR_NEGATIVE_TIME: return "negative_time";
        case FSE_ERR_ZERO_TIME_SEPARATION: return "zero_time_separation";
        case FSE_ERR_INTERNAL: return "internal_error";
    }
    return "unknown";
}

const char* fse_last_error(void) { return g_last_error.c_str(); }

fse_status fse_ml(fse_complex alpha, fse_complex beta, fse_complex z, double tol,
                  fse_ml_result* out) {
    if (!out) return FSE_ERR_INVALID_ARGUMENT;
    try {
        g_last_error.clear();
        fse::MlResult r = fse::ml(fse::MlOrder(to_cpp(alpha), to_cpp(beta)), to_cpp(z),
                                  options_for(tol));
        *out = {to_c(r.value), r.abs_error_bound, static_cast<fse_ml_method>(r.method)};
        return FSE_OK;
    } catch (const fse::MlNonConvergent& e) {
        g_last_error = e.what();
        *out = {to_c(e.best().value), e.best().abs_error_bound,
                static_cast<fse_ml_method>(e.best().method)};
        return FSE_ERR_NON_CONVERGENT;
    } catch (const fse::Error& e) {
        g_last_error = e.what();
        return map_code(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return FSE_ERR_INTERNAL;
    }
}

fse_status fse_causal_kernel(fse_complex nu, fse_complex w, double t, double tol,
                             fse_complex* out) {
    if (!out) return FSE_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *out = to_c(fse::causal_kernel(fse::DerivativeOrder(to_cpp(nu)), to_cpp(w), t,
                                       options_for(tol)));
    });
}

fse_status fse_dispersion_w(double k, fse_complex nu, fse_scales s, fse_complex* out) {
    if (!out) return FSE_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *out = to_c(fse::dispersion_w(k, fse::DerivativeOrder(to_cpp(nu)),
                                      fse::Scales(s.n_m, s.l_p, s.t_p)));
    });
}

fse_status fse_well_w(int n, double width, fse_complex nu, fse_scales s, fse_complex* out) {
    if (!out) return FSE_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *out = to_c(fse::well_w(n, width, fse::DerivativeOrder(to_cpp(nu)),
                                fse::Scales(s.n_m, s.l_p, s.t_p)));
    });
}

fse_status fse_decompose_half(double w, double t, double tol, fse_complex* onshell,
                              fse_complex* offshell) {
    if (!onshell || !offshell) return FSE_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        fse::HalfDecomposition d = fse::decompose_causal_half(w, t, tol > 0 ? tol : 1e-10);
        *onshell = to_c(d.onshell);
        *offshell = to_c(d.offshell);
    });
}

fse_status fse_spectrum_create(double k_min, double dk, size_t n, const fse_complex* amplitudes,
                               fse_spectrum** out) {
    if (!out || !amplitudes) return FSE_ERR_INVALID_ARGUMENT;
    *out = nullptr;
    return guarded([&] {
        std::vector<fse::Complex> amps(n);
        for (size_t i = 0; i < n; ++i) amps[i] = to_cpp(amplitudes[i]);
        *out = new fse_spectrum{
            fse::MomentumSpectrum(fse::KGridSpec(k_min, dk, n), std::move(amps))};
    });
}

fse_status fse_spectrum_gaussian(double k_center, double sigma_k, double x0, double k_min,
                                 double k_max, size_t n, fse_spectrum** out) {
    if (!out) return FSE_ERR_INVALID_ARGUMENT;
    *out = nullptr;
    return guarded([&] {
        *out = new fse_spectrum{fse::gaussian_packet(k_center, sigma_k, x0,
                                                     fse::KGridSpec::from_range(k_min, k_max, n))};
    });
}

void fse_spectrum_free(fse_spectrum* spec) { delete spec; }
size_t fse_spectrum_size(const fse_spectrum* spec) { return spec ? spec->impl.size() : 0; }
double fse_spectrum_k(const fse_spectrum* spec, size_t i) { return spec->impl.grid.k(i); }
fse_complex fse_spectrum_amplitude(const fse_spectrum* spec, size_t i) {
    return to_c(spec->impl.amplitudes[i]);
}

void fse_field_free(fse_field* field) { delete field; }
size_t fse_field_nt(const fse_field* field) { return field ? field->impl.nt() : 0; }
size_t fse_field_nx(const fse_field* field) { return field ? field->impl.nx() : 0; }
double fse_field_t(const fse_field* field, size_t it) { return field->impl.t_values[it]; }
double fse_field_x(const fse_field* field, size_t ix) { return field->impl.x_values[ix]; }
fse_complex fse_field_value(const fse_field* field, size_t it, size_t ix) {
    return to_c(field->impl.at(it, ix));
}

fse_status fse_evolve_free(const fse_spectrum* spec, fse_complex nu, fse_scales s,
                           const double* t_values, size_t nt, const double* x_values, size_t nx,
                           double tol, fse_field** out) {
    if (!spec || !t_values || !x_values || !out) return FSE_ERR_INVALID_ARGUMENT;
    *out = nullptr;
    return guarded([&] {
        *out = new fse_field{fse::evolve_free(spec->impl, fse::DerivativeOrder(to_cpp(nu)),
                                              fse::Scales(s.n_m, s.l_p, s.t_p),
                                              copy_span(t_values, nt), copy_span(x_values, nx),
                                              tol > 0 ? tol : 1e-10)};
    });
}

fse_status fse_evolve_well(double width, const fse_complex* coefficients, size_t n_modes,
                           fse_complex nu, fse_scales s, const double* t_values, size_t nt,
                           const double* x_values, size_t nx, double tol, fse_field** out) {
    if (!coefficients || !t_values || !x_values || !out) return FSE_ERR_INVALID_ARGUMENT;
    *out = nullptr;
    return guarded([&] {
        std::vector<fse::Complex> coeffs(n_modes);
        for (size_t i = 0; i < n_modes; ++i) coeffs[i] = to_cpp(coefficients[i]);
        fse::WellSpectrum ws(width, std::move(coeffs));
        *out = new fse_field{fse::evolve_well(ws, fse::DerivativeOrder(to_cpp(nu)),
                                              fse::Scales(s.n_m, s.l_p, s.t_p),
                                              copy_span(t_values, nt), copy_span(x_values, nx),
                                              tol > 0 ? tol : 1e-10)};
    });
}

fse_status fse_green_kernel(fse_green_kind kind, fse_complex nu, double t, double k,
                            fse_scales s, double tol, fse_complex* out) {
    if (!out) return FSE_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *out = to_c(fse::green_kernel_k(static_cast<fse::GreenKind>(kind),
                                        fse::DerivativeOrder(to_cpp(nu)), t, k,
                                        fse::Scales(s.n_m, s.l_p, s.t_p), options_for(tol)));
    });
}

fse_status fse_apply_green(fse_green_kind kind, fse_complex nu, const fse_spectrum* spec,
                           fse_scales s, const double* t_values, size_t nt,
                           const double* x_values, size_t nx, double tol, fse_field** out) {
    if (!spec || !t_values || !x_values || !out) return FSE_ERR_INVALID_ARGUMENT;
    *out = nullptr;
    return guarded([&] {
        *out = new fse_field{fse::apply_green(static_cast<fse::GreenKind>(kind),
                                              fse::DerivativeOrder(to_cpp(nu)), spec->impl,
                                              fse::Scales(s.n_m, s.l_p, s.t_p),
                                              copy_span(t_values, nt), copy_span(x_values, nx),
                                              tol > 0 ? tol : 1e-10)};
    });
}

fse_status fse_green_closed_form_nu1(fse_green_kind kind, double dt, double dx, fse_scales s,
                                     fse_complex* out) {
    if (!out) return FSE_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *out = to_c(fse::green_closed_form_nu1(static_cast<fse::GreenKind>(kind), dt, dx,
                                               fse::Scales(s.n_m, s.l_p, s.t_p)));
    });
}

fse_status fse_frac_deriv_apply(const double* x_values, const fse_complex* samples, size_t nx,
                                fse_complex lambda, const double* k_values, size_t nk,
                                fse_complex* out) {
    if (!x_values || !samples || !k_values || !out) return FSE_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        std::vector<fse::Complex> f(nx);
        for (size_t i = 0; i < nx; ++i) f[i] = to_cpp(samples[i]);
        std::vector<double> xs = copy_span(x_values, nx);
        std::vector<double> ks = copy_span(k_values, nk);
        fse::SignedSpectrum spec = fse::forward_transform(xs, f, ks);
        fse::SignedSpectrum deriv = fse::frac_deriv(spec, to_cpp(lambda));
        std::vector<fse::Complex> back = fse::inverse_transform(deriv, xs);
        for (size_t i = 0; i < nx; ++i) out[i] = to_c(back[i]);
    });
}

fse_status fse_primitive_ambiguity(int lambda, const fse_complex* coefficients, size_t n,
                                   fse_complex out_coeffs[2]) {
    if (!out_coeffs || (n > 0 && !coefficients)) return FSE_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        std::vector<fse::Complex> c(n);
        for (size_t i = 0; i < n; ++i) c[i] = to_cpp(coefficients[i]);
        fse::PrimitiveAmbiguity amb = fse::primitive_ambiguity(lambda, c);
        out_coeffs[0] = to_c(amb.constant);
        out_coeffs[1] = to_c(amb.linear);
    });
}

} // extern "C"
