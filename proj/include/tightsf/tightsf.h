#ifndef TIGHTSF_H
#define TIGHTSF_H

/*
 * C interface to the tightsf library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Strings returned by accessors are owned by the handle and stay valid until
 * it is freed. Functions that can fail return a tsf_status and store a message
 * retrievable with tsf_last_error() on the calling thread.
 */

#include <stddef.h>

#if defined(TSF_BUILDING_LIBRARY)
#define TSF_API __attribute__((visibility("default")))
#else
#define TSF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tsf_status {
    TSF_OK = 0,
    TSF_E_PARSE = 1,
    TSF_E_DOMAIN = 2,
    TSF_E_ARGUMENT = 3,
    TSF_E_INTERNAL = 4
} tsf_status;

typedef enum tsf_count_status {
    TSF_COUNT_EXACT = 0,
    TSF_COUNT_INFINITE = 1,
    TSF_COUNT_UNKNOWN = 2
} tsf_count_status;

typedef struct tsf_manifold tsf_manifold;
typedef struct tsf_classification tsf_classification;
typedef struct tsf_report tsf_report;

TSF_API const char* tsf_version(void);
TSF_API const char* tsf_status_string(tsf_status status);
/* Message of the last failed call on this thread, "" if none. */
TSF_API const char* tsf_last_error(void);

/* Seifert data "e0;r1,r2,r3" or "r1,r2,r3", optionally wrapped in M(...). */
TSF_API tsf_status tsf_manifold_parse(const char* spec, tsf_manifold** out);
TSF_API void tsf_manifold_free(tsf_manifold* m);
/* Normalized form, e.g. "M(-2; 1/2, 2/3, 11/13)". */
TSF_API const char* tsf_manifold_string(const tsf_manifold* m);
/* Decimal e0. */
TSF_API const char* tsf_manifold_e0(const tsf_manifold* m);
/* i in 1..3; writes "p/q" of the i-th invariant (ascending). */
TSF_API tsf_status tsf_manifold_invariant(const tsf_manifold* m, int i, const char** out);
/* Decimal |H1|, "0" when infinite. */
TSF_API const char* tsf_manifold_h1_order(const tsf_manifold* m);
/* Comma separated family tags. */
TSF_API const char* tsf_manifold_family(const tsf_manifold* m);
TSF_API tsf_status tsf_manifold_classify(const tsf_manifold* m, tsf_classification** out);

TSF_API tsf_count_status tsf_classification_status(const tsf_classification* c);
/* Decimal count, or NULL unless the status is exact. */
TSF_API const char* tsf_classification_count(const tsf_classification* c);
TSF_API const char* tsf_classification_case(const tsf_classification* c);
TSF_API const char* tsf_classification_fillability(const tsf_classification* c);
TSF_API void tsf_classification_free(tsf_classification* c);

/* One call per CLI subcommand. Optional string arguments may be NULL. */
TSF_API tsf_status tsf_cmd_cf(const char* slope, tsf_report** out);
TSF_API tsf_status tsf_cmd_bypass(const char* dividing, const char* ruling, const char* side, int oracle,
                                  tsf_report** out);
TSF_API tsf_status tsf_cmd_seifert(const char* spec, tsf_report** out);
TSF_API tsf_status tsf_cmd_slopes(const char* spec, const char* n1, const char* n2, const char* n3,
                                  tsf_report** out);
/* has_index = 0 reports every (i, j). */
TSF_API tsf_status tsf_cmd_floer(long n, int has_index, long i, long j, tsf_report** out);
/* Contents of a diagram file: {"L": [[...]], "rot": [...]}. */
TSF_API tsf_status tsf_cmd_theta(const char* diagram_json, tsf_report** out);
TSF_API tsf_status tsf_cmd_classify(const char* spec, tsf_report** out);
TSF_API tsf_status tsf_cmd_selftest(tsf_report** out);

TSF_API const char* tsf_report_json(const tsf_report* r);
TSF_API const char* tsf_report_text(const tsf_report* r);
/* 0 ok, 1 failed check, 2 unknown classification. */
TSF_API int tsf_report_exit_code(const tsf_report* r);
TSF_API void tsf_report_free(tsf_report* r);

#ifdef __cplusplus
}
#endif

#endif
