#ifndef AFFLIM_AFFLIM_H
#define AFFLIM_AFFLIM_H

/* C interface to afflim.  Every query returns a status code; results are
 * JSON documents written to *out, which the caller releases with
 * afflim_string_free.  On failure *out is left NULL and afflim_last_error
 * describes the problem for the calling thread. */

#include <stdint.h>

#if defined(AFFLIM_BUILDING)
#define AFFLIM_API __attribute__((visibility("default")))
#else
#define AFFLIM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum afflim_status {
  AFFLIM_OK = 0,
  AFFLIM_ERR_INVALID_ARGUMENT,
  AFFLIM_ERR_INVALID_RANK,
  AFFLIM_ERR_INDEX_OUT_OF_RANGE,
  AFFLIM_ERR_DIMENSION_MISMATCH,
  AFFLIM_ERR_ZERO_VECTOR,
  AFFLIM_ERR_NOT_IN_COROOT_LATTICE,
  AFFLIM_ERR_NOT_REDUCED,
  AFFLIM_ERR_NOT_REDUCED_INPUT,
  AFFLIM_ERR_PERIOD_NOT_FOUND,
  AFFLIM_ERR_NO_TRANSLATION_POWER,
  AFFLIM_ERR_UNSUPPORTED_TYPE,
  AFFLIM_ERR_NOT_PERMUTATION,
  AFFLIM_ERR_PATH_NOT_FOUND,
  AFFLIM_ERR_NO_CONVERGENCE,
  AFFLIM_ERR_BUDGET_EXCEEDED,
  AFFLIM_ERR_NO_BRANCH_NODE,
  AFFLIM_ERR_INTERNAL,
  AFFLIM_ERR_UNKNOWN
} afflim_status;

typedef struct afflim_rootsys afflim_rootsys;

AFFLIM_API const char* afflim_version(void);
/* Symbolic name of a status, e.g. "NotReducedInput". */
AFFLIM_API const char* afflim_status_name(afflim_status status);
/* Message for the last failed call on this thread; "" if none. */
AFFLIM_API const char* afflim_last_error(void);
AFFLIM_API void afflim_string_free(char* s);

/* type is "A3", "e7", ... */
AFFLIM_API afflim_status afflim_rootsys_new(const char* type, afflim_rootsys** out);
AFFLIM_API void afflim_rootsys_free(afflim_rootsys* rs);
AFFLIM_API int afflim_rootsys_rank(const afflim_rootsys* rs);

AFFLIM_API afflim_status afflim_info_json(const afflim_rootsys* rs, char** out);

/* strategy: NULL or "min" for the smallest admissible index, "seeded:<n>". */
AFFLIM_API afflim_status afflim_word_json(const afflim_rootsys* rs, int coweight, int periods, const char* strategy,
                                          char** out);
AFFLIM_API afflim_status afflim_minimal_json(const afflim_rootsys* rs, int count_only, char** out);
AFFLIM_API afflim_status afflim_heavy_json(const afflim_rootsys* rs, char** out);
/* order: NULL for 0,1,...,n, else a comma or space separated permutation. */
AFFLIM_API afflim_status afflim_coxeter_json(const afflim_rootsys* rs, const char* order, char** out);
AFFLIM_API afflim_status afflim_fc_json(const afflim_rootsys* rs, char** out);
/* Both full-commutativity tests on one finite word. */
AFFLIM_API afflim_status afflim_fc_word_json(const afflim_rootsys* rs, const char* word, int64_t budget, char** out);
/* branch_node < 0 picks the default branch node. */
AFFLIM_API afflim_status afflim_density_json(const afflim_rootsys* rs, const char* word, int branch_node, int64_t budget,
                                             char** out);

/* table is 1, 2 or 3; type NULL for every covered type, else a family ("B")
 * or a type ("B5"). */
AFFLIM_API afflim_status afflim_tables_json(int table, const char* type, char** out);

typedef struct afflim_verify_options {
  const char* type;  /* NULL: all types */
  int max_rank;      /* <= 0: each check's own range */
  int criterion;     /* 0: all, else 1..9 */
  int64_t budget;    /* <= 0: default */
  uint64_t seed;
  int timing;        /* include per-record seconds */
} afflim_verify_options;

AFFLIM_API void afflim_verify_options_init(afflim_verify_options* opts);
/* *all_passed is set to 1 when no record failed. */
AFFLIM_API afflim_status afflim_verify_json(const afflim_verify_options* opts, int* all_passed, char** out);

#ifdef __cplusplus
}
#endif

#endif /* AFFLIM_AFFLIM_H */
