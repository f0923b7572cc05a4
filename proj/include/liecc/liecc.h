/* C interface to the liecc Lie algebra toolkit.
 *
 * Every function returning liecc_status reports failures through the code
 * and a message retrievable with liecc_last_error() on the same thread.
 * Strings handed out through char** parameters are owned by the caller and
 * must be released with liecc_string_free(). JSON outputs follow the
 * structured report format of the command-line tool.
 */
#ifndef LIECC_H
#define LIECC_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define LIECC_API __declspec(dllexport)
#else
#define LIECC_API __attribute__((visibility("default")))
#endif

typedef enum liecc_status {
  LIECC_OK = 0,
  LIECC_ERR_INPUT = 1,    /* malformed or out-of-range input */
  LIECC_ERR_INTERNAL = 2  /* an internal invariant failed */
} liecc_status;

typedef enum liecc_field { LIECC_FIELD_REAL = 0, LIECC_FIELD_COMPLEX = 1 } liecc_field;

typedef struct liecc_algebra liecc_algebra;
typedef struct liecc_matrix liecc_matrix;

LIECC_API const char* liecc_version(void);
/* Message of the last failure on this thread; "" after a success. */
LIECC_API const char* liecc_last_error(void);
LIECC_API void liecc_string_free(char* s);

/* Algebras */
LIECC_API liecc_status liecc_algebra_from_json(const char* json, liecc_algebra** out);
LIECC_API liecc_status liecc_algebra_to_json(const liecc_algebra* a, char** out);
LIECC_API liecc_status liecc_algebra_with_field(const liecc_algebra* a, liecc_field field, liecc_algebra** out);
LIECC_API void liecc_algebra_free(liecc_algebra* a);
LIECC_API size_t liecc_algebra_dim(const liecc_algebra* a);
LIECC_API liecc_field liecc_algebra_field(const liecc_algebra* a);

/* subject is "complete", "cocomplete" or "both". */
LIECC_API liecc_status liecc_check_json(const liecc_algebra* a, const char* subject, char** out);
LIECC_API liecc_status liecc_is_complete(const liecc_algebra* a, int* out);
LIECC_API liecc_status liecc_is_cocomplete(const liecc_algebra* a, int* out);
/* Writes b_0..b_n into out (capacity cap); *count receives n + 1. */
LIECC_API liecc_status liecc_betti(const liecc_algebra* a, size_t* out, size_t cap, size_t* count);
LIECC_API liecc_status liecc_betti_json(const liecc_algebra* a, char** out);
LIECC_API liecc_status liecc_cohomology_json(const liecc_algebra* a, size_t degree, char** out);

/* Central extension by a closed 2-form given as {"omega": [{"i","j","value"}]}
 * (1-based, i < j); reports the extension and a split witness if one exists. */
LIECC_API liecc_status liecc_central_extension_json(const liecc_algebra* a, const char* omega_json, char** out);

/* Matrices (square, row list of fraction strings) */
LIECC_API liecc_status liecc_matrix_from_json(const char* json, liecc_matrix** out);
LIECC_API void liecc_matrix_free(liecc_matrix* m);
LIECC_API size_t liecc_matrix_size(const liecc_matrix* m);

LIECC_API liecc_status liecc_almost_abelian_json(const liecc_matrix* d, liecc_field field, char** out);
LIECC_API liecc_status liecc_propsim_json(const liecc_matrix* d1, const liecc_matrix* d2, liecc_field field, char** out);
LIECC_API liecc_status liecc_classify3_json(liecc_field field, char** out);

/* Catalog. filter is "all", "complete", "cocomplete" or "almost_abelian". */
LIECC_API liecc_status liecc_catalog_list(const char* filter, char** out);
LIECC_API liecc_status liecc_catalog_instantiate(const char* name, const char* const* params, size_t n_params,
                                                 liecc_field field, liecc_algebra** out);
LIECC_API liecc_status liecc_catalog_describe(const char* name, char** out);
LIECC_API liecc_status liecc_catalog_verify(char** out);

#ifdef __cplusplus
}
#endif

#endif
