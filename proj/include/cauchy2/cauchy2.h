/*
 * cauchy2 - Cauchy numbers of the second kind: exact tables, quadrature of
 * their log-weighted integral representation, and verification suites for
 * their monotonicity, determinant and product inequalities.
 *
 * C interface. All objects are opaque handles created by *_create / *_run /
 * eval functions and released by the matching *_destroy function. Every
 * fallible call returns a cauchy2_status; on failure cauchy2_last_error()
 * describes the problem. Strings returned through char** are owned by the
 * caller and released with cauchy2_string_free().
 *
 * Exact values cross the boundary as decimal strings "p/q" (or "p" for
 * integers). Inputs such as tolerances and evaluation points accept the
 * same form or exact decimals ("0.5", "1e-12").
 */
#ifndef CAUCHY2_CAUCHY2_H
#define CAUCHY2_CAUCHY2_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(CAUCHY2_BUILDING_LIBRARY)
#    define CAUCHY2_API __declspec(dllexport)
#  else
#    define CAUCHY2_API __declspec(dllimport)
#  endif
#else
#  define CAUCHY2_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cauchy2_status {
    CAUCHY2_OK = 0,
    CAUCHY2_E_NULL = 1,           /* null handle or output pointer */
    CAUCHY2_E_DOMAIN = 2,         /* argument outside the mathematical domain */
    CAUCHY2_E_CAPACITY = 3,       /* index beyond the table bound */
    CAUCHY2_E_PARSE = 4,          /* malformed number, tuple or suite name */
    CAUCHY2_E_ROUTE_MISMATCH = 5, /* the two exact routes disagree (a bug) */
    CAUCHY2_E_INTERNAL = 6
} cauchy2_status;

typedef enum cauchy2_format {
    CAUCHY2_FORMAT_PLAIN = 0,
    CAUCHY2_FORMAT_CSV = 1,
    CAUCHY2_FORMAT_JSON = 2
} cauchy2_format;

typedef enum cauchy2_rule {
    CAUCHY2_RULE_GAUSS_LEGENDRE = 0,
    CAUCHY2_RULE_CLENSHAW_CURTIS = 1
} cauchy2_rule;

CAUCHY2_API const char* cauchy2_version(void);
/* Message for the most recent failure on the calling thread. */
CAUCHY2_API const char* cauchy2_last_error(void);
CAUCHY2_API void cauchy2_string_free(char* s);
/* Canonical "p/q" form of a rational or exact decimal literal. */
CAUCHY2_API cauchy2_status cauchy2_parse_rational(const char* text, char** out);

/* ---- exact tables ------------------------------------------------------ */

typedef struct cauchy2_table cauchy2_table;

/* Builds c_0..c_{n_max} by both exact routes; fails with
 * CAUCHY2_E_ROUTE_MISMATCH if they differ anywhere. table_bound = 0 selects
 * the default bound (256). */
CAUCHY2_API cauchy2_status cauchy2_table_create(size_t n_max, size_t table_bound, cauchy2_table** out);
CAUCHY2_API void cauchy2_table_destroy(cauchy2_table* table);
CAUCHY2_API cauchy2_status cauchy2_table_n_max(const cauchy2_table* table, size_t* out);
CAUCHY2_API cauchy2_status cauchy2_table_c(const cauchy2_table* table, size_t n, char** out);
/* mu_n = c_n / n! */
CAUCHY2_API cauchy2_status cauchy2_table_mu(const cauchy2_table* table, size_t n, char** out);
CAUCHY2_API cauchy2_status cauchy2_table_c_decimal(const cauchy2_table* table, size_t n, unsigned digits,
                                                   char** out);
CAUCHY2_API cauchy2_status cauchy2_table_mu_decimal(const cauchy2_table* table, size_t n, unsigned digits,
                                                    char** out);

/* ---- quadrature -------------------------------------------------------- */

typedef struct cauchy2_quad cauchy2_quad;

/* c_n / n! from the integral over (0, inf). precision is in bits (>= 2). */
CAUCHY2_API cauchy2_status cauchy2_quad_moment(size_t n, const char* tol, unsigned precision, cauchy2_rule rule,
                                               cauchy2_quad** out);
/* F(z) = z / ((1+z) ln(1+z)) from its integral representation, real z > -1. */
CAUCHY2_API cauchy2_status cauchy2_eval_F(const char* z, const char* tol, unsigned precision, cauchy2_quad** out);
CAUCHY2_API cauchy2_status cauchy2_eval_h(size_t n, const char* t, const char* tol, unsigned precision,
                                          cauchy2_quad** out);
CAUCHY2_API cauchy2_status cauchy2_eval_h_general(const char* s, const char* t, const char* tol,
                                                  unsigned precision, cauchy2_quad** out);
/* k-th t-derivative of h_ell at t. */
CAUCHY2_API cauchy2_status cauchy2_eval_h_derivative(size_t ell, size_t k, const char* t, const char* tol,
                                                     unsigned precision, cauchy2_quad** out);
CAUCHY2_API void cauchy2_quad_destroy(cauchy2_quad* q);

/* digits = 0 renders every digit the requested precision carries. */
CAUCHY2_API cauchy2_status cauchy2_quad_value(const cauchy2_quad* q, unsigned digits, char** out);
CAUCHY2_API cauchy2_status cauchy2_quad_value_double(const cauchy2_quad* q, double* out);
CAUCHY2_API cauchy2_status cauchy2_quad_error_estimate(const cauchy2_quad* q, unsigned digits, char** out);
CAUCHY2_API cauchy2_status cauchy2_quad_tolerance(const cauchy2_quad* q, char** out);
CAUCHY2_API cauchy2_status cauchy2_quad_nodes_used(const cauchy2_quad* q, size_t* out);
CAUCHY2_API cauchy2_status cauchy2_quad_converged(const cauchy2_quad* q, int* out);
/* Known value of the integral, where one exists: exact mu_n for moments and
 * for h at t = 0 (integer s for the general form), the closed form for F. */
CAUCHY2_API cauchy2_status cauchy2_quad_has_reference(const cauchy2_quad* q, int* out);
CAUCHY2_API cauchy2_status cauchy2_quad_reference(const cauchy2_quad* q, unsigned digits, char** out);
/* "p/q" when the reference is exact; CAUCHY2_E_DOMAIN otherwise. */
CAUCHY2_API cauchy2_status cauchy2_quad_reference_exact(const cauchy2_quad* q, char** out);
/* |value - reference| */
CAUCHY2_API cauchy2_status cauchy2_quad_deviation(const cauchy2_quad* q, unsigned digits, char** out);
/* *out = 1 iff |value - reference| <= factor * tol. */
CAUCHY2_API cauchy2_status cauchy2_quad_deviation_within(const cauchy2_quad* q, const char* factor, int* out);

/* ---- verification suites ---------------------------------------------- */

typedef struct cauchy2_verify_options cauchy2_verify_options;
typedef struct cauchy2_report cauchy2_report;

CAUCHY2_API cauchy2_status cauchy2_verify_options_create(cauchy2_verify_options** out);
CAUCHY2_API void cauchy2_verify_options_destroy(cauchy2_verify_options* options);
/* "all" or a comma list of suite names (see cauchy2_suite_names). */
CAUCHY2_API cauchy2_status cauchy2_verify_options_set_suites(cauchy2_verify_options* options, const char* suites);
CAUCHY2_API cauchy2_status cauchy2_verify_options_set_n_bound(cauchy2_verify_options* options, size_t n_bound);
CAUCHY2_API cauchy2_status cauchy2_verify_options_set_cm_depth(cauchy2_verify_options* options, size_t depth);
/* Comma list of positive rationals. */
CAUCHY2_API cauchy2_status cauchy2_verify_options_set_epsilons(cauchy2_verify_options* options,
                                                               const char* epsilons);
CAUCHY2_API cauchy2_status cauchy2_verify_options_set_depth(cauchy2_verify_options* options, size_t depth);
CAUCHY2_API cauchy2_status cauchy2_verify_options_set_seed(cauchy2_verify_options* options, uint64_t seed);
CAUCHY2_API cauchy2_status cauchy2_verify_options_set_table_bound(cauchy2_verify_options* options, size_t bound);
/* Canonical JSON form of the options. */
CAUCHY2_API cauchy2_status cauchy2_verify_options_json(const cauchy2_verify_options* options, char** out);
/* Comma list of every suite name, canonical order. */
CAUCHY2_API const char* cauchy2_suite_names(void);

CAUCHY2_API cauchy2_status cauchy2_verify_run(const cauchy2_verify_options* options, cauchy2_report** out);
CAUCHY2_API void cauchy2_report_destroy(cauchy2_report* report);
/* *out = 1 iff every suite passes apart from the documented discrepancy suites. */
CAUCHY2_API cauchy2_status cauchy2_report_ok(const cauchy2_report* report, int* out);
CAUCHY2_API cauchy2_status cauchy2_report_counts(const cauchy2_report* report, size_t* passed, size_t* failed,
                                                 size_t* discrepancies);
CAUCHY2_API cauchy2_status cauchy2_report_render(const cauchy2_report* report, cauchy2_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* CAUCHY2_CAUCHY2_H */
