/* C interface to the quantum cluster seed library.
 *
 * Every entry point returns a qcl_status. On failure, qcl_last_error()
 * returns a message for the calling thread, valid until its next call into
 * the library. Objects are opaque handles released with the matching *_free.
 * Strings handed out by the library are released with qcl_string_free.
 * Mutation indices are 1-based. */
#ifndef QCLUSTER_H
#define QCLUSTER_H

#include <stddef.h>
#include <stdint.h>

#if defined(QCL_BUILDING_LIBRARY)
#define QCL_API __attribute__((visibility("default")))
#else
#define QCL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qcl_status {
  QCL_OK = 0,
  QCL_ERR_INVALID_ARGUMENT = 1,
  QCL_ERR_PARSE = 2,
  QCL_ERR_INDEX_OUT_OF_RANGE = 3,
  QCL_ERR_DIMENSION_MISMATCH = 4,
  QCL_ERR_NOT_SKEW_SYMMETRIC = 5,
  QCL_ERR_NOT_BLOCK_DIAGONAL = 6,
  QCL_ERR_NON_POSITIVE_D = 7,
  QCL_ERR_SINGULAR_C = 8,
  QCL_ERR_NOT_SKEW_SYMMETRIZABLE = 9,
  QCL_ERR_NOT_DIVISIBLE = 10,
  QCL_ERR_DIVISION_BY_ZERO = 11,
  QCL_ERR_NOT_Q_COMMUTING = 12,
  QCL_ERR_NON_INTEGER_EXPONENT = 13,
  QCL_ERR_TORUS_MISMATCH = 14,
  QCL_ERR_OVERFLOW = 15,
  QCL_ERR_INTEGRITY = 16,
  QCL_ERR_INTERNAL = 17
} qcl_status;

typedef struct qcl_seed qcl_seed;
typedef struct qcl_report qcl_report;

typedef struct qcl_explore_options {
  uint32_t depth;
  uint64_t budget; /* 0 selects the default node budget */
  uint32_t jobs;   /* 0 or 1: single-threaded */
  int count_up_to_permutation;
} qcl_explore_options;

QCL_API const char* qcl_status_name(qcl_status status);
QCL_API const char* qcl_last_error(void);
QCL_API void qcl_string_free(char* s);
QCL_API uint64_t qcl_default_budget(void);

/* Seeds */
QCL_API qcl_status qcl_seed_from_json(const char* json, qcl_seed** out);
QCL_API qcl_status qcl_seed_to_json(const qcl_seed* seed, char** out);
QCL_API void qcl_seed_free(qcl_seed* seed);
QCL_API qcl_status qcl_seed_rank(const qcl_seed* seed, size_t* m, size_t* n);
QCL_API qcl_status qcl_seed_mutate(const qcl_seed* seed, size_t k, qcl_seed** out);
/* Word such as "1,2,1"; the empty string is the identity. */
QCL_API qcl_status qcl_seed_mutate_word(const qcl_seed* seed, const char* word,
                                        qcl_seed** out);
QCL_API qcl_status qcl_seed_equal(const qcl_seed* a, const qcl_seed* b, int* out);
QCL_API qcl_status qcl_seed_is_integrable(const qcl_seed* seed, int* out);
QCL_API qcl_status qcl_seed_is_sign_coherent(const qcl_seed* seed, int* out);
/* One line per variable: "X'1 = q^(-1/2) X1^-1 X2 + X1^-1". */
QCL_API qcl_status qcl_seed_variables_text(const qcl_seed* seed, char** out);
QCL_API qcl_status qcl_seed_duplicate(const qcl_seed* seed, qcl_seed** out);

/* Compatibility of "B" and "Lambda" read from a seed document; writes the
 * diagonal of D as a JSON array. */
QCL_API qcl_status qcl_check_compatible_json(const char* seed_json, char** d_json);
/* {"B", "C", "D"} with integer or "p/q" entries -> {"Lambda", "Lambda1", "Lambda2"}. */
QCL_API qcl_status qcl_lambda_from_bcd_json(const char* json, char** out);

/* Exploration */
QCL_API qcl_status qcl_explore(const qcl_seed* root, const qcl_explore_options* options,
                               qcl_report** out);
/* Matrix-only variant; reads only "B" from the seed document. */
QCL_API qcl_status qcl_explore_matrix_json(const char* seed_json,
                                           const qcl_explore_options* options,
                                           qcl_report** out);
QCL_API qcl_status qcl_report_to_json(const qcl_report* report, char** out);
QCL_API int qcl_report_exit_code(const qcl_report* report);
QCL_API void qcl_report_free(qcl_report* report);

/* Writes {"returnsToStart", "upToPermutation", "permutation"} as JSON. */
QCL_API qcl_status qcl_periodicity_scan(const qcl_seed* seed, const char* word, char** out);

#ifdef __cplusplus
}
#endif

#endif /* QCLUSTER_H */
