/*
 * C interface to the volterra library: genetic Volterra algebras, their
 * derivation and local-derivation spaces, and the four-dimensional case
 * classification.
 *
 * Objects are opaque handles. Every call returns a vt_status; results that
 * are documents come back as NUL-terminated JSON strings which the caller
 * releases with vt_string_free. On failure vt_last_error() describes the
 * problem (thread-local, valid until the next call on the same thread).
 */
#ifndef VOLTERRA_H
#define VOLTERRA_H

#include <stdint.h>

#if defined(_WIN32)
#  if defined(VT_BUILDING_LIBRARY)
#    define VT_API __declspec(dllexport)
#  else
#    define VT_API __declspec(dllimport)
#  endif
#else
#  define VT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values 0-4 double as CLI exit codes. */
typedef enum vt_status {
    VT_OK = 0,
    VT_AXIOM_VIOLATION = 1,     /* spec breaks the Volterra axioms */
    VT_VERIFICATION_FAILED = 2, /* some check evaluated to false */
    VT_PARSE_ERROR = 3,         /* malformed JSON, schema error, I/O error */
    VT_INCONCLUSIVE = 4,        /* local-derivation sampling did not stabilize */
    VT_INVALID_ARGUMENT = 5,    /* bad handle, unknown case label, ... */
    VT_INTERNAL_ERROR = 6
} vt_status;

typedef struct vt_algebra vt_algebra;

VT_API const char* vt_version(void);
VT_API const char* vt_last_error(void);
VT_API void vt_string_free(char* s);

/* Construction. The handle keeps the spec even when it violates the axioms,
 * so vt_validate can report the violations. */
VT_API vt_status vt_algebra_from_json(const char* json, vt_algebra** out);
VT_API vt_status vt_algebra_from_file(const char* path, vt_algebra** out);
VT_API vt_status vt_generate(const char* case_label, const char* mode, uint64_t seed, vt_algebra** out);
VT_API void vt_algebra_free(vt_algebra* alg);

VT_API int32_t vt_algebra_dimension(const vt_algebra* alg);
VT_API vt_status vt_algebra_to_json(const vt_algebra* alg, char** out_json);

/* JSON array of violations; VT_AXIOM_VIOLATION when non-empty. */
VT_API vt_status vt_validate(const vt_algebra* alg, char** out_json);

/* {"dim": k, "basis": [[...]]} */
VT_API vt_status vt_derive(const vt_algebra* alg, char** out_json);

/* {"case", "signature", "permutation"} (1-based permutation) */
VT_API vt_status vt_classify(const vt_algebra* alg, char** out_json);

/* {"locder_dim", "samples_used", "stabilized", "equals_der", "der_dim"};
 * VT_VERIFICATION_FAILED if the spaces differ, VT_INCONCLUSIVE if sampling
 * did not stabilize. sample_seed 0 selects the default seed. */
VT_API vt_status vt_localcheck(const vt_algebra* alg, uint64_t sample_seed, char** out_json);

/* Full case report; status as for vt_localcheck plus lemma/containment checks. */
VT_API vt_status vt_verify(const vt_algebra* alg, uint64_t sample_seed, char** out_json);

/* Runs the acceptance battery. cases: comma-separated labels or NULL for all;
 * dims: "2..6", "2,3,5" or NULL for 2..6. VT_VERIFICATION_FAILED if any
 * group failed; the summary is produced either way. */
VT_API vt_status vt_run_suite(int32_t trials, uint64_t seed, const char* cases, const char* dims,
                              char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* VOLTERRA_H */
