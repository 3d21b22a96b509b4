/* fse — time-fractional Schroedinger evolution library.
 *
 * C interface to the C++ core: opaque handles, status codes, and a
 * thread-local error message. All functions are safe to call from multiple
 * threads concurrently. Complex values travel as {re, im} pairs.
 */
#ifndef FSE_H
#define FSE_H

#include <stddef.h>

#if defined(_WIN32)
#define FSE_API __declspec(dllexport)
#else
#define FSE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct {
    double re;
    double im;
} fse_complex;

/* Planck-scaled parameters: mass ratio n_m = m/M_p and the l_p, t_p units. */
typedef struct {
    double n_m;
    double l_p;
    double t_p;
} fse_scales;

typedef enum {
    FSE_OK = 0,
    FSE_ERR_INVALID_ARGUMENT = 1,
    FSE_ERR_INVALID_ORDER = 2,
    FSE_ERR_NON_CONVERGENT = 3,
    FSE_ERR_SECTOR_UNSUPPORTED = 4,
    FSE_ERR_SINGULAR_AT_ZERO = 5,
    FSE_ERR_QUADRATURE_FAILURE = 6,
    FSE_ERR_GRID_TOO_NARROW = 7,
    FSE_ERR_EDGE_DECAY = 8,
    FSE_ERR_BOUNDARY = 9,
    FSE_ERR_ORIGIN_SINGULARITY = 10,
    FSE_ERR_UNSUPPORTED_LAMBDA = 11,
    FSE_ERR_NEGATIVE_TIME = 12,
    FSE_ERR_ZERO_TIME_SEPARATION = 13,
    FSE_ERR_INTERNAL = 99
} fse_status;

typedef enum {
    FSE_ML_TAYLOR_SERIES = 0,
    FSE_ML_ASYMPTOTIC = 1,
    FSE_ML_QUADRATURE = 2
} fse_ml_method;

typedef enum {
    FSE_GREEN_RETARDED = 0,
    FSE_GREEN_ADVANCED = 1,
    FSE_GREEN_WHEELER = 2
} fse_green_kind;

typedef struct {
    fse_complex value;
    double error_bound; /* certified absolute bound */
    fse_ml_method method;
} fse_ml_result;

typedef struct fse_spectrum fse_spectrum; /* amplitudes on a uniform k grid */
typedef struct fse_field fse_field;       /* complex samples on a (t, x) grid */

FSE_API const char* fse_version(void);
FSE_API const char* fse_status_name(fse_status status);
/* Detail message of the last failing call on this thread ("" if none). */
FSE_API const char* fse_last_error(void);

/* --- Mittag-Leffler kernel layer ------------------------------------- */

/* E_{alpha,beta}(z) with certified error bound; tol <= 0 uses the default
 * 1e-12 abs-or-rel target. FSE_ERR_NON_CONVERGENT still stores the best
 * value and achieved bound in *out. */
FSE_API fse_status fse_ml(fse_complex alpha, fse_complex beta, fse_complex z, double tol,
                          fse_ml_result* out);

/* Causal kernel E_nu[(-it)^nu w], t >= 0. */
FSE_API fse_status fse_causal_kernel(fse_complex nu, fse_complex w, double t, double tol,
                                     fse_complex* out);

/* Dispersion w = l_p^2 k^2 / (2 t_p^nu n_m) and well eigenfrequency w_n. */
FSE_API fse_status fse_dispersion_w(double k, fse_complex nu, fse_scales s, fse_complex* out);
FSE_API fse_status fse_well_w(int n, double width, fse_complex nu, fse_scales s,
                              fse_complex* out);

/* On-shell/off-shell split of the causal nu = 1/2 kernel (canonical weight). */
FSE_API fse_status fse_decompose_half(double w, double t, double tol, fse_complex* onshell,
                                      fse_complex* offshell);

/* --- spectra and fields ----------------------------------------------- */

FSE_API fse_status fse_spectrum_create(double k_min, double dk, size_t n,
                                       const fse_complex* amplitudes, fse_spectrum** out);
FSE_API fse_status fse_spectrum_gaussian(double k_center, double sigma_k, double x0,
                                         double k_min, double k_max, size_t n,
                                         fse_spectrum** out);
FSE_API void fse_spectrum_free(fse_spectrum* spec);
FSE_API size_t fse_spectrum_size(const fse_spectrum* spec);
FSE_API double fse_spectrum_k(const fse_spectrum* spec, size_t i);
FSE_API fse_complex fse_spectrum_amplitude(const fse_spectrum* spec, size_t i);

FSE_API void fse_field_free(fse_field* field);
FSE_API size_t fse_field_nt(const fse_field* field);
FSE_API size_t fse_field_nx(const fse_field* field);
FSE_API double fse_field_t(const fse_field* field, size_t it);
FSE_API double fse_field_x(const fse_field* field, size_t ix);
FSE_API fse_complex fse_field_value(const fse_field* field, size_t it, size_t ix);

/* --- evolution --------------------------------------------------------- */

FSE_API fse_status fse_evolve_free(const fse_spectrum* spec, fse_complex nu, fse_scales s,
                                   const double* t_values, size_t nt, const double* x_values,
                                   size_t nx, double tol, fse_field** out);

FSE_API fse_status fse_evolve_well(double width, const fse_complex* coefficients,
                                   size_t n_modes, fse_complex nu, fse_scales s,
                                   const double* t_values, size_t nt, const double* x_values,
                                   size_t nx, double tol, fse_field** out);

/* --- Green functions ---------------------------------------------------- */

FSE_API fse_status fse_green_kernel(fse_green_kind kind, fse_complex nu, double t, double k,
                                    fse_scales s, double tol, fse_complex* out);

FSE_API fse_status fse_apply_green(fse_green_kind kind, fse_complex nu,
                                   const fse_spectrum* spec, fse_scales s,
                                   const double* t_values, size_t nt, const double* x_values,
                                   size_t nx, double tol, fse_field** out);

FSE_API fse_status fse_green_closed_form_nu1(fse_green_kind kind, double dt, double dx,
                                             fse_scales s, fse_complex* out);

/* --- spectral fractional derivative -------------------------------------- */

/* d^lambda/dx^lambda of samples on a uniform x grid containing 0, computed
 * through the two-sided spectrum on the k grid; out has nx entries. */
FSE_API fse_status fse_frac_deriv_apply(const double* x_values, const fse_complex* samples,
                                        size_t nx, fse_complex lambda, const double* k_values,
                                        size_t nk, fse_complex* out);

/* Ambiguity polynomial for integer lambda in {-1, -2}: out_coeffs[0] +
 * out_coeffs[1] * x, from the entire weight's series coefficients at 0. */
FSE_API fse_status fse_primitive_ambiguity(int lambda, const fse_complex* coefficients,
                                           size_t n, fse_complex out_coeffs[2]);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* FSE_H */
