/*
 * entcat C API.
 *
 * Every function returns an entcat_status. On failure a description is
 * available from entcat_last_error() on the calling thread. Objects are
 * opaque handles released with the matching *_destroy function; destroy
 * functions accept NULL.
 */
#ifndef ENTCAT_ENTCAT_H
#define ENTCAT_ENTCAT_H

#include <stddef.h>

#if defined(_WIN32)
#  define ENTCAT_API __declspec(dllexport)
#else
#  define ENTCAT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum entcat_status {
  ENTCAT_OK = 0,
  ENTCAT_ERR_EMPTY_INPUT = 1,
  ENTCAT_ERR_NEGATIVE_ENTRY = 2,
  ENTCAT_ERR_NOT_NORMALIZED = 3,
  ENTCAT_ERR_NON_FINITE = 4,
  ENTCAT_ERR_OUT_OF_RANGE = 5,
  ENTCAT_ERR_INVALID_DIMENSION = 6,
  ENTCAT_ERR_INAPPLICABLE = 7,
  ENTCAT_ERR_INVALID_PARAMS = 8,
  ENTCAT_ERR_PARSE = 9,
  ENTCAT_ERR_NUMERICAL = 10,
  ENTCAT_ERR_NULL_ARGUMENT = 11,
  ENTCAT_ERR_BUFFER_TOO_SMALL = 12,
  ENTCAT_ERR_INTERNAL = 13
} entcat_status;

typedef struct entcat_spectrum entcat_spectrum;
typedef struct entcat_search_result entcat_search_result;
typedef struct entcat_ecp entcat_ecp;
typedef struct entcat_landscape entcat_landscape;

ENTCAT_API const char* entcat_last_error(void);
ENTCAT_API const char* entcat_status_name(entcat_status status);

/* ---- spectra ---------------------------------------------------------- */

ENTCAT_API entcat_status entcat_spectrum_create(const double* values, size_t count, int normalize,
                                                entcat_spectrum** out);
/* Accepts {"coefficients": [...]} or a bare JSON array. */
ENTCAT_API entcat_status entcat_spectrum_parse_json(const char* text, int normalize,
                                                    entcat_spectrum** out);
ENTCAT_API entcat_status entcat_maximally_entangled(size_t p, entcat_spectrum** out);
ENTCAT_API entcat_status entcat_tensor_sorted(const entcat_spectrum* a, const entcat_spectrum* b,
                                              entcat_spectrum** out);
ENTCAT_API void entcat_spectrum_destroy(entcat_spectrum* s);

ENTCAT_API size_t entcat_spectrum_size(const entcat_spectrum* s);
/* Copies min(size, capacity) coefficients; BUFFER_TOO_SMALL if truncated. */
ENTCAT_API entcat_status entcat_spectrum_coefficients(const entcat_spectrum* s, double* out,
                                                      size_t capacity);
ENTCAT_API entcat_status entcat_entropy(const entcat_spectrum* s, double* nats);

/* ---- majorization ----------------------------------------------------- */

typedef enum entcat_verdict {
  ENTCAT_EQUIVALENT = 0,
  ENTCAT_SOURCE_TO_TARGET = 1,
  ENTCAT_TARGET_TO_SOURCE = 2,
  ENTCAT_INCOMPARABLE = 3
} entcat_verdict;

typedef struct entcat_classification {
  entcat_verdict verdict;
  /* 1-based first violating prefix length; 0 when the direction holds. */
  size_t forward_violation;
  size_t backward_violation;
} entcat_classification;

ENTCAT_API entcat_status entcat_check_majorization(const entcat_spectrum* x,
                                                   const entcat_spectrum* y, int* majorized);
ENTCAT_API entcat_status entcat_classify_pair(const entcat_spectrum* x, const entcat_spectrum* y,
                                              entcat_classification* out);
ENTCAT_API entcat_status entcat_tail(const entcat_spectrum* x, size_t l, double* out);
ENTCAT_API entcat_status entcat_p_max(const entcat_spectrum* x, const entcat_spectrum* y,
                                      double* out);
ENTCAT_API const char* entcat_verdict_name(entcat_verdict v);

/* Exact rational mode. Coefficients are decimal strings ("0.4", "1/3");
 * results are written as "p/q" text into buf. */
ENTCAT_API entcat_status entcat_exact_check_majorization(const char* const* x, size_t nx,
                                                         const char* const* y, size_t ny,
                                                         int* majorized);
ENTCAT_API entcat_status entcat_exact_classify_pair(const char* const* x, size_t nx,
                                                    const char* const* y, size_t ny,
                                                    entcat_classification* out);
/* Literal number tokens of a spectrum JSON document, one per line, for
 * feeding the exact functions without a round trip through double. */
ENTCAT_API entcat_status entcat_json_literals(const char* text, char* buf, size_t capacity,
                                              size_t* needed);
ENTCAT_API entcat_status entcat_exact_p_max(const char* const* x, size_t nx, const char* const* y,
                                            size_t ny, char* buf, size_t capacity);

/* ---- catalysis -------------------------------------------------------- */

ENTCAT_API entcat_status entcat_gate_lemma1(const entcat_spectrum* catalyst, int* prune);
ENTCAT_API entcat_status entcat_gate_lemma3(const entcat_spectrum* x, const entcat_spectrum* y,
                                            int* possible);
ENTCAT_API entcat_status entcat_gate_incomparable_3x3(const entcat_spectrum* x,
                                                      const entcat_spectrum* y, int* impossible);
ENTCAT_API entcat_status entcat_gate_lemma4(const entcat_spectrum* x, const entcat_spectrum* y,
                                            int* no_boost);
ENTCAT_API entcat_status entcat_check_interconvertible(const entcat_spectrum* x,
                                                       const entcat_spectrum* y, int* result);

typedef struct entcat_search_options {
  size_t dim;
  double grid_step;
  int refine;
  int apply_gates;
  int collect_feasible;
  int parallel;
} entcat_search_options;

/* dim 2, grid_step 1e-3, gates on, everything else off. */
ENTCAT_API void entcat_search_options_default(entcat_search_options* opts);

ENTCAT_API entcat_status entcat_find_deterministic_catalyst(const entcat_spectrum* x,
                                                           const entcat_spectrum* y,
                                                           const entcat_search_options* opts,
                                                           entcat_search_result** out);
ENTCAT_API entcat_status entcat_find_boost_catalyst(const entcat_spectrum* x,
                                                   const entcat_spectrum* y,
                                                   const entcat_search_options* opts,
                                                   entcat_search_result** out);
ENTCAT_API void entcat_search_result_destroy(entcat_search_result* r);

ENTCAT_API int entcat_search_found(const entcat_search_result* r);
ENTCAT_API int entcat_search_pruned(const entcat_search_result* r);
ENTCAT_API double entcat_search_achieved(const entcat_search_result* r);
ENTCAT_API double entcat_search_baseline(const entcat_search_result* r);
ENTCAT_API size_t entcat_search_evaluations(const entcat_search_result* r);
ENTCAT_API double entcat_search_effective_step(const entcat_search_result* r);
/* New handle with the catalyst, or ENTCAT_ERR_INAPPLICABLE if none. */
ENTCAT_API entcat_status entcat_search_catalyst(const entcat_search_result* r,
                                               entcat_spectrum** out);
ENTCAT_API size_t entcat_search_gate_count(const entcat_search_result* r);
/* Pointer valid for the lifetime of r; NULL when out of range. */
ENTCAT_API const char* entcat_search_gate(const entcat_search_result* r, size_t i);
ENTCAT_API size_t entcat_search_feasible_count(const entcat_search_result* r);
ENTCAT_API entcat_status entcat_search_feasible(const entcat_search_result* r, size_t i,
                                               entcat_spectrum** out);

/* ---- linear programming ----------------------------------------------- */

typedef enum entcat_lp_status { ENTCAT_LP_OPTIMAL = 0, ENTCAT_LP_INFEASIBLE = 1 } entcat_lp_status;

/* maximize c.p s.t. A p <= b, sum p = 1, p >= 0. A is rows x n, row-major.
 * solution must hold n doubles. */
ENTCAT_API entcat_status entcat_lp_solve(size_t n, size_t rows, const double* objective,
                                         const double* matrix, const double* bounds,
                                         entcat_lp_status* status, double* value,
                                         double* solution);

/* ---- concentration ---------------------------------------------------- */

ENTCAT_API entcat_status entcat_optimal_uncatalysed(const entcat_spectrum* x, entcat_ecp** out);
ENTCAT_API entcat_status entcat_optimal_catalysed(const entcat_spectrum* x,
                                                  const entcat_spectrum* catalyst,
                                                  entcat_ecp** out);
ENTCAT_API void entcat_ecp_destroy(entcat_ecp* d);
ENTCAT_API size_t entcat_ecp_size(const entcat_ecp* d);
ENTCAT_API entcat_status entcat_ecp_probabilities(const entcat_ecp* d, double* out,
                                                  size_t capacity);
ENTCAT_API double entcat_ecp_nats(const entcat_ecp* d);
ENTCAT_API double entcat_ecp_ebits(const entcat_ecp* d);

typedef enum entcat_binding { ENTCAT_BINDING_B = 0, ENTCAT_BINDING_ENTROPY = 1 } entcat_binding;

typedef struct entcat_bounds {
  double bound_b_nats;
  double entropy_nats;
  entcat_binding binding;
} entcat_bounds;

ENTCAT_API entcat_status entcat_concentration_bounds(const entcat_spectrum* x, entcat_bounds* out);

typedef struct entcat_landscape_row {
  double beta1;
  double beta2;
  double nats;
  double ebits;
} entcat_landscape_row;

ENTCAT_API entcat_status entcat_landscape_compute(const entcat_spectrum* x, size_t steps,
                                                  int parallel, entcat_landscape** out);
ENTCAT_API void entcat_landscape_destroy(entcat_landscape* l);
ENTCAT_API size_t entcat_landscape_size(const entcat_landscape* l);
ENTCAT_API entcat_status entcat_landscape_row_at(const entcat_landscape* l, size_t i,
                                                 entcat_landscape_row* out);
/* Writes the CSV text (NUL-terminated) into buf. *needed receives the
 * required size including the terminator, also on BUFFER_TOO_SMALL. */
ENTCAT_API entcat_status entcat_landscape_csv(const entcat_landscape* l, char* buf,
                                              size_t capacity, size_t* needed);

#ifdef __cplusplus
}
#endif

#endif /* ENTCAT_ENTCAT_H */
