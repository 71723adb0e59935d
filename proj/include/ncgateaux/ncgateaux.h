/*
 * ncgateaux: Gateaux derivatives of polynomial maps on noncommutative
 * normed algebras (quaternions, complex numbers, real n x n matrices).
 *
 * Every object is an opaque handle owned by the caller and released with the
 * matching *_destroy function. Functions return an ncg_status; on failure the
 * out-parameters are left untouched and ncg_last_error_message() describes
 * the problem. The error state is per thread. A result that overflows to a
 * non-finite value fails with NCG_ERR_NUMERIC_OVERFLOW.
 *
 * Coordinates are always relative to the canonical basis of the algebra,
 * whose first vector is the unit. For matrices the basis is I followed by the
 * matrix units E_rc (r*n + c > 0).
 */
#ifndef NCGATEAUX_H
#define NCGATEAUX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  ifdef NCG_BUILDING_LIBRARY
#    define NCG_API __declspec(dllexport)
#  else
#    define NCG_API __declspec(dllimport)
#  endif
#else
#  define NCG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ncg_status {
  NCG_OK = 0,
  NCG_ERR_TAG_MISMATCH = 1,
  NCG_ERR_DIMENSION = 2,
  NCG_ERR_ARITY = 3,
  NCG_ERR_DOMAIN = 4,
  NCG_ERR_LEXER = 5,
  NCG_ERR_PARSE = 6,
  NCG_ERR_LITERAL_DIMENSION = 7,
  NCG_ERR_NUMERIC_OVERFLOW = 8,
  NCG_ERR_INVALID_ARGUMENT = 9,
  NCG_ERR_BUFFER_TOO_SMALL = 10,
  NCG_ERR_INTERNAL = 11
} ncg_status;

typedef struct ncg_algebra ncg_algebra;
typedef struct ncg_element ncg_element;
typedef struct ncg_poly ncg_poly;
typedef struct ncg_form ncg_form;
typedef struct ncg_linmap ncg_linmap;
typedef struct ncg_taylor ncg_taylor;
typedef struct ncg_check_report ncg_check_report;

NCG_API const char* ncg_version(void);
NCG_API const char* ncg_status_name(ncg_status status);
NCG_API const char* ncg_last_error_message(void);
/* Byte offset of the last lexer/parse error, or -1. */
NCG_API long ncg_last_error_position(void);

/* Strings returned through char** are heap copies: release with ncg_string_free. */
NCG_API void ncg_string_free(char* s);

/* ---- algebras ---------------------------------------------------------- */

/* "quat", "complex" or "matrix:N" (1 <= N <= 8). */
NCG_API ncg_status ncg_algebra_create(const char* spec, ncg_algebra** out);
NCG_API void ncg_algebra_destroy(ncg_algebra* algebra);
NCG_API size_t ncg_algebra_dimension(const ncg_algebra* algebra);
NCG_API ncg_status ncg_algebra_name(const ncg_algebra* algebra, char** out);

/* ---- elements ---------------------------------------------------------- */

NCG_API ncg_status ncg_element_from_coords(const ncg_algebra* algebra, const double* coords,
                                           size_t count, ncg_element** out);
/* Constant expression in the polynomial syntax, e.g. "(1+2i-j)", "[[1,0;0,2]]". */
NCG_API ncg_status ncg_element_parse(const ncg_algebra* algebra, const char* text,
                                     ncg_element** out);
NCG_API ncg_status ncg_element_random_unit(const ncg_algebra* algebra, uint64_t seed,
                                           ncg_element** out);
NCG_API ncg_status ncg_element_clone(const ncg_element* e, ncg_element** out);
NCG_API void ncg_element_destroy(ncg_element* e);
/* Writes dimension coordinates into coords (capacity count). */
NCG_API ncg_status ncg_element_coords(const ncg_element* e, double* coords, size_t count);
NCG_API ncg_status ncg_element_add(const ncg_element* a, const ncg_element* b, ncg_element** out);
NCG_API ncg_status ncg_element_sub(const ncg_element* a, const ncg_element* b, ncg_element** out);
NCG_API ncg_status ncg_element_mul(const ncg_element* a, const ncg_element* b, ncg_element** out);
NCG_API ncg_status ncg_element_scale(const ncg_element* a, double r, ncg_element** out);
NCG_API ncg_status ncg_element_norm(const ncg_element* e, double* out);
NCG_API ncg_status ncg_element_format(const ncg_element* e, char** out);

/* ---- polynomials ------------------------------------------------------- */

/* Grammar: expr := term (("+"|"-") term)*; term := factor ("*" factor)*;
 * factor := atom ("^" nat)?; atom := "x" | literal | "(" expr ")" | "-" atom. */
NCG_API ncg_status ncg_poly_parse(const ncg_algebra* algebra, const char* text, ncg_poly** out);
/* Random polynomial with terms_per_degree monomials in each degree 0..max_degree. */
NCG_API ncg_status ncg_poly_random(const ncg_algebra* algebra, size_t max_degree,
                                   size_t terms_per_degree, double coeff_bound, uint64_t seed,
                                   ncg_poly** out);
NCG_API void ncg_poly_destroy(ncg_poly* p);
NCG_API size_t ncg_poly_degree(const ncg_poly* p);
NCG_API size_t ncg_poly_term_count(const ncg_poly* p);
NCG_API ncg_status ncg_poly_eval(const ncg_poly* p, const ncg_element* x, ncg_element** out);
NCG_API ncg_status ncg_poly_add(const ncg_poly* p, const ncg_poly* q, ncg_poly** out);
NCG_API ncg_status ncg_poly_mul(const ncg_poly* p, const ncg_poly* q, ncg_poly** out);
/* q(y) = p(y - y0). */
NCG_API ncg_status ncg_poly_shift(const ncg_poly* p, const ncg_element* y0, ncg_poly** out);
/* g(f(x)). */
NCG_API ncg_status ncg_poly_substitute(const ncg_poly* g, const ncg_poly* f, ncg_poly** out);
NCG_API ncg_status ncg_poly_format(const ncg_poly* p, char** out);

/* ---- derivative forms -------------------------------------------------- */

NCG_API ncg_status ncg_poly_derivative(const ncg_poly* p, size_t order, ncg_form** out);
NCG_API void ncg_form_destroy(ncg_form* f);
NCG_API size_t ncg_form_order(const ncg_form* f);
NCG_API size_t ncg_form_term_count(const ncg_form* f);
/* hs holds exactly ncg_form_order(f) increments. */
NCG_API ncg_status ncg_form_apply(const ncg_form* f, const ncg_element* x,
                                  const ncg_element* const* hs, size_t count, ncg_element** out);
NCG_API ncg_status ncg_form_apply_diag(const ncg_form* f, const ncg_element* x,
                                       const ncg_element* h, ncg_element** out);
NCG_API ncg_status ncg_form_format(const ncg_form* f, char** out);

/* ---- linear maps x -> sum a_i x b_i ------------------------------------ */

NCG_API ncg_status ncg_linmap_create(const ncg_algebra* algebra, ncg_linmap** out);
NCG_API ncg_status ncg_linmap_first_derivative(const ncg_poly* p, const ncg_element* x,
                                               ncg_linmap** out);
NCG_API void ncg_linmap_destroy(ncg_linmap* map);
NCG_API ncg_status ncg_linmap_add_term(ncg_linmap* map, const ncg_element* left,
                                       const ncg_element* right);
NCG_API size_t ncg_linmap_term_count(const ncg_linmap* map);
NCG_API ncg_status ncg_linmap_apply(const ncg_linmap* map, const ncg_element* x, ncg_element** out);
/* outer o inner. */
NCG_API ncg_status ncg_linmap_compose(const ncg_linmap* outer, const ncg_linmap* inner,
                                      ncg_linmap** out);
/* Row-major dimension x dimension matrix; column j is coords(L(e_j)). */
NCG_API ncg_status ncg_linmap_jacobian(const ncg_linmap* map, double* entries, size_t count);
/* sampled: max |L(u)| over random unit u (lower bound); upper: sum |a_i||b_i|. */
NCG_API ncg_status ncg_linmap_norm_estimate(const ncg_linmap* map, size_t samples, uint64_t seed,
                                            double* sampled, double* upper);

/* ---- Taylor expansions ------------------------------------------------- */

NCG_API ncg_status ncg_taylor_expand(const ncg_poly* f, const ncg_element* center, size_t order,
                                     ncg_taylor** out);
NCG_API void ncg_taylor_destroy(ncg_taylor* e);
NCG_API size_t ncg_taylor_order(const ncg_taylor* e);
NCG_API ncg_status ncg_taylor_eval(const ncg_taylor* e, const ncg_element* y, ncg_element** out);
/* (k!)^-1 d^k f(x0)(y - x0)^k. */
NCG_API ncg_status ncg_taylor_term(const ncg_taylor* e, size_t k, const ncg_element* y,
                                   ncg_element** out);
/* ratios[i] = |f(x0 + t_i h) - e(x0 + t_i h)| / t_i^n; ts positive, strictly decreasing. */
NCG_API ncg_status ncg_taylor_remainder_probe(const ncg_poly* f, const ncg_taylor* e,
                                              const ncg_element* h, const double* ts,
                                              size_t count, double* ratios);

/* ---- finite differences ------------------------------------------------ */

typedef enum ncg_fd_mode { NCG_FD_FORWARD = 0, NCG_FD_CENTRAL = 1 } ncg_fd_mode;

typedef struct ncg_fd_schedule {
  double t0;
  size_t levels;
  ncg_fd_mode mode;
  int richardson;
} ncg_fd_schedule;

/* Central differences, t0 = 1e-2, 3 Richardson levels. */
NCG_API ncg_fd_schedule ncg_fd_default_schedule(void);

/* Black-box map: reads dimension input coordinates, writes dimension output
 * coordinates. A nonzero return aborts the difference with NCG_ERR_INTERNAL. */
typedef int (*ncg_map_fn)(const double* in, double* out, size_t dimension, void* user);

NCG_API ncg_status ncg_fd_directional(const ncg_algebra* algebra, ncg_map_fn f, void* user,
                                      const ncg_element* x, const ncg_element* h,
                                      const ncg_fd_schedule* schedule, ncg_element** out);
NCG_API ncg_status ncg_fd_directional_poly(const ncg_poly* p, const ncg_element* x,
                                           const ncg_element* h, const ncg_fd_schedule* schedule,
                                           ncg_element** out);
/* order <= 4. */
NCG_API ncg_status ncg_fd_higher_poly(const ncg_poly* p, const ncg_element* x, const ncg_element* h,
                                      size_t order, const ncg_fd_schedule* schedule,
                                      ncg_element** out);

/* ---- theorem checks ---------------------------------------------------- */

/* suite: "monomial", "leibniz", "chain" or "taylor". */
NCG_API ncg_status ncg_check_run(const ncg_algebra* algebra, const char* suite, uint64_t seed,
                                 ncg_check_report** out);
NCG_API void ncg_check_report_destroy(ncg_check_report* report);
NCG_API size_t ncg_check_report_count(const ncg_check_report* report);
/* Returned name is owned by the report. */
NCG_API const char* ncg_check_report_name(const ncg_check_report* report, size_t i);
NCG_API int ncg_check_report_passed(const ncg_check_report* report, size_t i);
NCG_API double ncg_check_report_max_error(const ncg_check_report* report, size_t i);
NCG_API double ncg_check_report_tolerance(const ncg_check_report* report, size_t i);
NCG_API size_t ncg_check_report_cases(const ncg_check_report* report, size_t i);

#ifdef __cplusplus
}
#endif

#endif /* NCGATEAUX_H */
