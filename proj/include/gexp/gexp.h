/* C interface to the group-exponent verification library.
 *
 * Every function returns a gexp_rc; results travel through opaque handles.
 * Handles are not thread-safe; the error string is thread-local.
 */
#ifndef GEXP_H
#define GEXP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define GEXP_API __declspec(dllexport)
#else
#define GEXP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gexp_rc {
  GEXP_OK = 0,
  GEXP_CHECK_FAILED = 1,
  GEXP_INVALID = 2,
  GEXP_CAP_EXCEEDED = 3,
  GEXP_INTERNAL = 4
} gexp_rc;

typedef struct gexp_algebra gexp_algebra;
typedef struct gexp_group gexp_group;
typedef struct gexp_report gexp_report;

/* Message for the most recent failure on this thread; empty string if none.
 * The pointer stays valid until the next failing call on the same thread. */
GEXP_API const char* gexp_last_error(void);

GEXP_API const char* gexp_version(void);

/* ---- bracket algebras ---------------------------------------------- */

/* sl2 over F_p; p must be an odd prime (3, 5 or 7 are the supported sizes
 * for group construction, validation alone works for any listed p). */
GEXP_API gexp_rc gexp_algebra_sl2(uint32_t p, gexp_algebra** out);

/* The dim-dimensional algebra with every bracket zero. */
GEXP_API gexp_rc gexp_algebra_zero(uint32_t p, uint32_t dim, gexp_algebra** out);

/* Parse the structure-constant text format (see README). */
GEXP_API gexp_rc gexp_algebra_from_text(const char* text, gexp_algebra** out);

GEXP_API void gexp_algebra_free(gexp_algebra* a);

GEXP_API gexp_rc gexp_algebra_p(const gexp_algebra* a, uint32_t* out);
GEXP_API gexp_rc gexp_algebra_dim(const gexp_algebra* a, uint32_t* out);

/* alternating/jacobi get 1 when the law holds, 0 when it fails. */
GEXP_API gexp_rc gexp_algebra_validate(const gexp_algebra* a, int* alternating, int* jacobi);

/* Number of k-dimensional subalgebras; cap = 0 keeps the default bound. */
GEXP_API gexp_rc gexp_algebra_subalgebra_count(const gexp_algebra* a, uint32_t k, uint64_t cap,
                                               uint64_t* out);

/* ---- groups --------------------------------------------------------- */

/* Central extension of F_p^n by the algebra; order p^(2n). cap = 0 keeps
 * the default size bound. */
GEXP_API gexp_rc gexp_group_build(const gexp_algebra* a, uint64_t cap, gexp_group** out);

GEXP_API void gexp_group_free(gexp_group* g);

GEXP_API gexp_rc gexp_group_order(const gexp_group* g, uint64_t* out);
GEXP_API gexp_rc gexp_group_exponent(const gexp_group* g, uint32_t threads, uint64_t* out);
GEXP_API gexp_rc gexp_group_center_size(const gexp_group* g, uint64_t* out);

/* ---- commands ------------------------------------------------------- */

typedef struct gexp_verify_options {
  uint32_t p;       /* 3, 5 or 7 */
  uint64_t cap;     /* 0 keeps built-in work bounds */
  uint64_t seed;    /* sampling seed for the sweeps too big to exhaust */
  uint32_t threads; /* worker threads for the exponent sweeps */
} gexp_verify_options;

GEXP_API void gexp_verify_options_init(gexp_verify_options* opt);

/* The full verification pipeline.  A report is produced even when some
 * check fails (rc GEXP_CHECK_FAILED distinguishes that from hard errors,
 * in which case *out is NULL). */
GEXP_API gexp_rc gexp_verify_counterexample(const gexp_verify_options* opt, gexp_report** out);

/* group_spec: cyclic:M | abelian:D1,D2,... | table:FILE */
GEXP_API gexp_rc gexp_cohomology(const char* group_spec, uint32_t max_degree, uint64_t cap,
                                 gexp_report** out);

/* algebra_spec: sl2 | zero:N | path to a structure-constant file. */
GEXP_API gexp_rc gexp_group_info(const char* algebra_spec, uint32_t p, uint32_t threads,
                                 uint64_t cap, gexp_report** out);

/* dim = -1 summarizes every dimension. */
GEXP_API gexp_rc gexp_subalgebras(const char* algebra_spec, uint32_t p, int32_t dim,
                                  uint64_t cap, gexp_report** out);

GEXP_API gexp_rc gexp_snf_file(const char* matrix_path, uint64_t cap, gexp_report** out);

/* ---- reports -------------------------------------------------------- */

GEXP_API void gexp_report_free(gexp_report* r);

/* Both pointers stay valid until gexp_report_free. */
GEXP_API const char* gexp_report_text(const gexp_report* r);
GEXP_API const char* gexp_report_json(const gexp_report* r);

/* 1 when every computed check passed, else 0. */
GEXP_API int gexp_report_passed(const gexp_report* r);

GEXP_API size_t gexp_report_check_count(const gexp_report* r);
GEXP_API const char* gexp_report_check_id(const gexp_report* r, size_t i);
/* "pass", "fail" or "cited"; NULL when i is out of range. */
GEXP_API const char* gexp_report_check_status(const gexp_report* r, size_t i);

#ifdef __cplusplus
}
#endif

#endif /* GEXP_H */
