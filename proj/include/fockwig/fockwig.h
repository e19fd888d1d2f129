/*
 * (C) Copyright 2026 the fockwig developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 *
 * C interface of the fockwig library: Hermite-basis analysis of functions
 * and quantum states, weighted decay norms, and phase-space (Wigner /
 * ambiguity) synthesis with verification suites.
 *
 * Conventions:
 *  - every fallible call returns fw_status; FW_OK is 0
 *  - on failure, fw_last_error() describes the problem (thread-local)
 *  - objects returned through fw_*_create/read functions are owned by the
 *    caller and released with the matching fw_*_free
 *  - strings returned through char** are released with fw_string_free,
 *    arrays returned through double** with fw_doubles_free
 */
#ifndef FOCKWIG_H
#define FOCKWIG_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define FW_API __declspec(dllexport)
#else
#define FW_API __attribute__((visibility("default")))
#endif

typedef enum fw_status {
  FW_OK = 0,
  FW_ERR_DOMAIN = 1,       /* argument outside the mathematical domain */
  FW_ERR_ARGUMENT = 2,     /* malformed or inconsistent arguments */
  FW_ERR_DATA = 3,         /* NaN/Inf input, CSV conflicts, divergent data */
  FW_ERR_CAPACITY = 4,     /* index beyond the evaluation ceiling */
  FW_ERR_NUMERIC = 5,      /* iteration/quadrature failed its tolerance */
  FW_ERR_PRECONDITION = 6, /* hypothesis of a checked bound does not hold */
  FW_ERR_CONVENTION = 7,   /* phase-space convention misuse */
  FW_ERR_IO = 8,           /* file unreadable/unwritable, parse failure */
  FW_ERR_INTERNAL = 9
} fw_status;

typedef struct fw_weight fw_weight;   /* weight function w(t) */
typedef struct fw_coeffs fw_coeffs;   /* complex coefficient sequence */
typedef struct fw_rule fw_rule;       /* Gauss rule for exp(-x^2) */
typedef struct fw_density fw_density; /* truncated density matrix */
typedef struct fw_grid fw_grid;       /* rectangular phase-space grid */

FW_API const char* fw_version(void);
FW_API const char* fw_last_error(void);
FW_API void fw_string_free(char* s);
FW_API void fw_doubles_free(double* p);

/* ---- weights ---------------------------------------------------------- */

FW_API fw_status fw_weight_power(double lambda, double beta, fw_weight** out);
FW_API fw_status fw_weight_tabulated(const double* ts, const double* ws, int count,
                                     fw_weight** out);
/* spec: inline JSON or a path to a JSON file */
FW_API fw_status fw_weight_from_json(const char* spec, fw_weight** out);
FW_API fw_status fw_weight_to_json(const fw_weight* w, char** json);
FW_API fw_status fw_weight_scaled(const fw_weight* w, double c, fw_weight** out);
FW_API void fw_weight_free(fw_weight* w);
FW_API fw_status fw_weight_eval(const fw_weight* w, double t, double* out);
/* used_golden_section may be NULL */
FW_API fw_status fw_omega_star(const fw_weight* w, double nu, double* value,
                               int* used_golden_section);
/* grid may be NULL with count 0 for the default [1e-2, 1e4] grid */
FW_API fw_status fw_check_weight_axioms(const fw_weight* w, const double* grid, int count,
                                        char** json_report, int* all_pass);

/* ---- Hermite basis ---------------------------------------------------- */

/* out must hold n_max + 1 values */
FW_API fw_status fw_hermite_values(int n_max, double x, double* out);

FW_API fw_status fw_rule_create(int order, fw_rule** out);
FW_API void fw_rule_free(fw_rule* r);
FW_API int fw_rule_order(const fw_rule* r);
FW_API fw_status fw_rule_nodes(const fw_rule* r, double* out);
FW_API fw_status fw_rule_weights(const fw_rule* r, double* out);
FW_API fw_status fw_rule_lifted_weights(const fw_rule* r, double* out);

/* im may be NULL for a real sequence */
FW_API fw_status fw_coeffs_create(const double* re, const double* im, int count,
                                  fw_coeffs** out);
FW_API void fw_coeffs_free(fw_coeffs* c);
FW_API int fw_coeffs_count(const fw_coeffs* c);
FW_API fw_status fw_coeffs_get(const fw_coeffs* c, int n, double* re, double* im);
FW_API fw_status fw_coeffs_read_csv(const char* path, fw_coeffs** out);
FW_API fw_status fw_coeffs_write_csv(const fw_coeffs* c, const char* path);

/* f given by samples at the rule's nodes (count == order); im may be NULL */
FW_API fw_status fw_analyze_at_nodes(const fw_rule* r, const double* re, const double* im,
                                     int count, int n_max, fw_coeffs** out);
FW_API fw_status fw_synthesize(const fw_coeffs* c, const double* xs, int count,
                               double* out_re, double* out_im);
FW_API fw_status fw_fourier_coefficients(const fw_coeffs* c, fw_coeffs** out);
/* alpha_n -> (2n+1)^power alpha_n; explicit overflow error past double range */
FW_API fw_status fw_hermite_operator(const fw_coeffs* c, int power, fw_coeffs** out);

/* ---- weighted norms (diverging may be NULL) --------------------------- */

FW_API fw_status fw_sequence_norm(const fw_coeffs* c, const fw_weight* w, double* value,
                                  int* diverging);
FW_API fw_status fw_function_norm(const double* xs, const double* f_re, const double* f_im,
                                  int n, const double* xis, const double* ff_re,
                                  const double* ff_im, int m, const fw_weight* w,
                                  double* value, int* diverging);
FW_API fw_status fw_matrix_norm(const fw_density* rho, const fw_weight* w, double* value,
                                int* diverging);
FW_API fw_status fw_phase_space_norm(const fw_grid* g, const fw_weight* w, double* value,
                                     int* diverging);

/* ---- decay envelopes --------------------------------------------------- */

typedef struct fw_envelope {
  double lambda_hat;
  double beta_hat;
  double c_hat;
  double residual;
  int support_count;
  int degenerate;
} fw_envelope;

FW_API fw_status fw_fit_envelope(const fw_coeffs* c, fw_envelope* out);

/* ---- density matrices -------------------------------------------------- */

FW_API fw_status fw_density_pure(const fw_coeffs* c, fw_density** out);
FW_API fw_status fw_density_counterexample(int n_max, fw_density** out);
FW_API fw_status fw_density_read_csv(const char* path, fw_density** out);
FW_API fw_status fw_density_write_csv(const fw_density* rho, const char* path);
FW_API void fw_density_free(fw_density* rho);
FW_API int fw_density_n_max(const fw_density* rho);
FW_API fw_status fw_density_get(const fw_density* rho, int m, int n, double* re, double* im);
/* physical may be NULL; json_report may be NULL */
FW_API fw_status fw_density_validate(const fw_density* rho, char** json_report, int* physical);

FW_API fw_status fw_counterexample_closed_form(double q, double p, double* out);
/* checks_pass may be NULL */
FW_API fw_status fw_counterexample_experiment(int n_max, double window_lo, double window_hi,
                                              char** json_report, int* checks_pass);

/* ---- phase space -------------------------------------------------------- */

FW_API fw_status fw_special_hermite(int m, int n, double q, double p, double* re, double* im);
FW_API fw_status fw_radial_modulus(int m, int n, double r, double* out);

FW_API fw_status fw_wigner(const fw_density* rho, const double* q_axis, int nq,
                           const double* p_axis, int np, int threads, fw_grid** out);
FW_API fw_status fw_ambiguity(const fw_coeffs* c, const double* theta_axis, int nt,
                              const double* varpi_axis, int nv, int threads, fw_grid** out);
FW_API void fw_grid_free(fw_grid* g);
FW_API int fw_grid_nq(const fw_grid* g);
FW_API int fw_grid_np(const fw_grid* g);
/* 0 = plain, 1 = tilde */
FW_API int fw_grid_convention(const fw_grid* g);
FW_API fw_status fw_grid_axes(const fw_grid* g, double* q_out, double* p_out);
FW_API fw_status fw_grid_value(const fw_grid* g, int i, int j, double* re, double* im);
FW_API fw_status fw_grid_read_csv(const char* path, fw_grid** out);
FW_API fw_status fw_grid_write_csv(const fw_grid* g, const char* path);
FW_API fw_status fw_tilde_rescale(const fw_grid* g, fw_grid** out);
/* q_marg sized nq, p_marg sized np; boundary_warning may be NULL */
FW_API fw_status fw_marginals(const fw_grid* g, double* q_marg, double* p_marg,
                              int* boundary_warning);

/* ---- sampled-function files -------------------------------------------- */

FW_API fw_status fw_samples_read_csv(const char* path, double** xs, double** re, double** im,
                                     int* count);
FW_API fw_status fw_samples_write_csv(const char* path, const double* xs, const double* re,
                                      const double* im, int count);

/* ---- verification ------------------------------------------------------ */

/* name: hermite | laguerre | wigner | tame | counterexample.
 * options_json (optional): {"n_max":int, "threads":int, "seed":int,
 *                           "tolerances":{"check-name":value}}            */
FW_API fw_status fw_run_suite(const char* name, const char* options_json, char** json_report,
                              int* failures);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* FOCKWIG_H */
