/* C interface to the mfcat library: exact matrix factorizations, their tensor
 * products, and the coherence check suites.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Strings returned through char** are allocated by
 * the library and released with mfc_string_free. Every fallible call returns
 * an mfc_status; on failure mfc_last_error() describes the problem (the
 * message is per thread and valid until the next call on that thread). */
#ifndef MFCAT_H
#define MFCAT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MFC_API __declspec(dllexport)
#else
#define MFC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mfc_status {
  MFC_OK = 0,
  MFC_ERR_PARSE = 1,
  MFC_ERR_DIMENSION = 2,
  MFC_ERR_SIZE_GUARD = 3,
  MFC_ERR_NOT_SQUARE = 4,
  MFC_ERR_SIZE_MISMATCH = 5,
  MFC_ERR_PRODUCT_MISMATCH = 6,
  MFC_ERR_POTENTIAL_MISMATCH = 7,
  MFC_ERR_SHAPE_MISMATCH = 8,
  MFC_ERR_SQUARE_FAILURE = 9,
  MFC_ERR_COMPOSABILITY = 10,
  MFC_ERR_NOT_EQUIVALENT = 11,
  MFC_ERR_ASSOCIATIVITY_MISMATCH = 12,
  MFC_ERR_INVALID_ARGUMENT = 13,
  MFC_ERR_NULL_POINTER = 14,
  MFC_ERR_INTERNAL = 99
} mfc_status;

typedef enum mfc_tensor_mode { MFC_TENSOR_YOSHINO = 0, MFC_TENSOR_MULT = 1 } mfc_tensor_mode;

typedef enum mfc_verdict {
  MFC_VERDICT_PASS = 0,
  MFC_VERDICT_FAIL = 1,
  MFC_VERDICT_XFAIL_OK = 2,
  MFC_VERDICT_INFO = 3
} mfc_verdict;

typedef enum mfc_format { MFC_FORMAT_TEXT = 0, MFC_FORMAT_STRUCTURED = 1 } mfc_format;

typedef struct mfc_poly mfc_poly;
typedef struct mfc_matrix mfc_matrix;
typedef struct mfc_mf mfc_mf;
typedef struct mfc_reports mfc_reports;

MFC_API const char* mfc_last_error(void);
MFC_API const char* mfc_status_name(mfc_status status);
MFC_API void mfc_string_free(char* s);

/* Polynomials */
MFC_API mfc_status mfc_poly_parse(const char* text, mfc_poly** out);
MFC_API mfc_status mfc_poly_to_string(const mfc_poly* p, char** out);
MFC_API mfc_status mfc_poly_add(const mfc_poly* p, const mfc_poly* q, mfc_poly** out);
MFC_API mfc_status mfc_poly_mul(const mfc_poly* p, const mfc_poly* q, mfc_poly** out);
MFC_API void mfc_poly_free(mfc_poly* p);

/* Matrices, literal syntax [[x, -y], [y, x]] */
MFC_API mfc_status mfc_matrix_parse(const char* text, mfc_matrix** out);
MFC_API mfc_status mfc_matrix_to_string(const mfc_matrix* m, char** out);
MFC_API mfc_status mfc_matrix_shape(const mfc_matrix* m, size_t* rows, size_t* cols);
MFC_API void mfc_matrix_free(mfc_matrix* m);

/* Matrix factorizations */
MFC_API mfc_status mfc_mf_new(const mfc_matrix* phi, const mfc_matrix* psi, const mfc_poly* f,
                              mfc_mf** out);
MFC_API mfc_status mfc_mf_parse_file(const char* text, mfc_mf** out);
MFC_API mfc_status mfc_mf_print_file(const mfc_mf* x, char** out);
MFC_API mfc_status mfc_mf_size(const mfc_mf* x, size_t* size);
/* 1 if equal, 0 if not; -1 on a null argument. */
MFC_API int mfc_mf_equal(const mfc_mf* a, const mfc_mf* b);
MFC_API mfc_status mfc_mf_tensor(const mfc_mf* a, const mfc_mf* b, mfc_tensor_mode mode,
                                 mfc_mf** out);
MFC_API mfc_status mfc_mf_syzygy(const mfc_mf* x, mfc_mf** out);
MFC_API mfc_status mfc_mf_epower(unsigned n, mfc_mf** out);
MFC_API void mfc_mf_free(mfc_mf* x);

/* Check suites: all, t-semiunital, right-monoidal, pseudo-monoidal,
 * counterexamples, tensor. */
MFC_API mfc_status mfc_suite_run(const char* name, unsigned maxpow, unsigned samples,
                                 uint64_t seed, mfc_reports** out);
MFC_API size_t mfc_reports_count(const mfc_reports* r);
/* Borrowed strings, valid until mfc_reports_free. */
MFC_API mfc_status mfc_reports_get(const mfc_reports* r, size_t index, const char** check_id,
                                   mfc_verdict* verdict, const char** detail);
/* 1 when no report failed. */
MFC_API int mfc_reports_ok(const mfc_reports* r);
MFC_API mfc_status mfc_reports_format(const mfc_reports* r, mfc_format format, char** out);
MFC_API void mfc_reports_free(mfc_reports* r);

#ifdef __cplusplus
}
#endif

#endif /* MFCAT_H */
