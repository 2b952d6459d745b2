#ifndef EDIM_EDIM_H
#define EDIM_EDIM_H

/*
 * C interface to the essential-dimension verifier.
 *
 * Every entry point that produces output allocates an edim_report behind an
 * opaque handle. A report carries a verified flag and two prerendered
 * renderings (text and JSON); render calls return pointers into the report,
 * valid until edim_report_free.
 *
 * Status codes separate machine failures from mathematical outcomes: a run
 * whose computations finish but whose claim fails to verify still returns
 * EDIM_OK, with edim_report_verified reporting 0. Nonzero statuses mean the
 * computation itself could not be carried out; edim_last_error then returns
 * a thread-local description of the failure.
 */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define EDIM_API __declspec(dllexport)
#else
#define EDIM_API __attribute__((visibility("default")))
#endif

typedef enum edim_status {
  EDIM_OK = 0,
  EDIM_ERR_INVALID_ARGUMENT = 1,
  EDIM_ERR_PARSE = 2,
  EDIM_ERR_IO = 3,
  EDIM_ERR_INCONSISTENT = 4,
  EDIM_ERR_INTERNAL = 5
} edim_status;

typedef enum edim_format {
  EDIM_FORMAT_TEXT = 0,
  EDIM_FORMAT_JSON = 1
} edim_format;

typedef struct edim_report edim_report;

typedef struct edim_bounds_options {
  int max_n;               /* table range 1..max_n; must be >= 7 */
  int exclusion;           /* nonzero: run both case verifications and,
                              when both pass, inject ed(A_7) != 3 */
  const char* seeds_path;  /* optional JSON seed file; NULL for none */
} edim_bounds_options;

/* Fills in the defaults: max_n = 30, exclusion on, no seed file. */
EDIM_API void edim_bounds_options_init(edim_bounds_options* options);

/* Fixed locus of the rank-2 abelian subgroup <(1 2 3), (4 5 6)> of A_7 on
 * the power-sum threefold p_1 = p_2 = 0 in P^6: enumerates the candidate
 * fixed points and checks that p_3 is nonzero at every one. */
EDIM_API edim_status edim_verify_case_i(edim_report** out);

/* Commutator of the lifts of (1 2)(3 4) and (1 2)(5 6) to the double cover
 * of A_7 inside the rank-7 Clifford algebra: checks the scalar is -1, with
 * the commuting control pair (1 2 3), (4 5 6) lifting to +1. */
EDIM_API edim_status edim_verify_case_ii(edim_report** out);

/* Classifies the pairwise commutators of the matrices in a JSON file as
 * scalar or non-scalar. Informational: the report is always verified. */
EDIM_API edim_status edim_check_matrices(const char* path, edim_report** out);

/* Bound table for ed(S_n) and ed(A_n), 1 <= n <= max_n, with provenance.
 * NULL options means the defaults. */
EDIM_API edim_status edim_bounds(const edim_bounds_options* options,
                                 edim_report** out);

/* Full derivation of ed_k(A_7) = ed_k(S_7) = 4. target is "a7" or "s7";
 * the exclusion step always runs. NULL options means the defaults. */
EDIM_API edim_status edim_prove(const char* target,
                                const edim_bounds_options* options,
                                edim_report** out);

/* 1 when every claim in the report verified, 0 otherwise; -1 on NULL. */
EDIM_API int edim_report_verified(const edim_report* report);

/* Rendering owned by the report; NULL on bad arguments. */
EDIM_API const char* edim_report_render(const edim_report* report,
                                        edim_format format);

EDIM_API void edim_report_free(edim_report* report);

/* Description of the latest failure on this thread; empty string if the
 * latest call succeeded. */
EDIM_API const char* edim_last_error(void);

EDIM_API const char* edim_version(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* EDIM_EDIM_H */
