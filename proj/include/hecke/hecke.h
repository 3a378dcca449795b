/* C interface to the hecke library. All handles are opaque; every function
   returning hk_status leaves a message for hk_last_error() on failure. */
#ifndef HECKE_HECKE_H
#define HECKE_HECKE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define HK_API __attribute__((visibility("default")))
#else
#define HK_API
#endif

typedef enum hk_status {
  HK_OK = 0,
  HK_ERR_INVALID_ARGUMENT,
  HK_ERR_INVALID_WEIGHT_TYPE,
  HK_ERR_ZERO_SPACE,
  HK_ERR_NON_EXACT_DIVISION,
  HK_ERR_DIVISION_BY_ZERO,
  HK_ERR_DIMENSION_MISMATCH,
  HK_ERR_INDEX_OUT_OF_RANGE,
  HK_ERR_NOT_INVARIANT,
  HK_ERR_NOT_MONIC,
  HK_ERR_CONSTRUCTION_INCONSISTENT,
  HK_ERR_DELTA_NOT_INJECTIVE,
  HK_ERR_CROSSCHECK_MISMATCH,
  HK_ERR_EMPTY_LEVEL_ONE,
  HK_ERR_UNSUPPORTED_FORMAT,
  HK_ERR_PARSE,
  HK_ERR_INTERNAL
} hk_status;

typedef enum hk_format { HK_FORMAT_JSON = 0, HK_FORMAT_CSV = 1 } hk_format;

typedef struct hk_analysis hk_analysis;
typedef struct hk_document hk_document;

typedef struct hk_summary {
  int64_t q, p, e, k, m, j;
  size_t n;
  size_t dim_level1, dim_old, dim_new;
  int tt_injective, tt_injective_crosscheck;
  int direct_sum, direct_sum_crosscheck;
  int has_dirsum_det_tvaluation;
  size_t dirsum_det_tvaluation;
  size_t zero_count;
  size_t identity_failures;
  int theorem_violation;
} hk_summary;

typedef struct hk_sweep_spec {
  const int64_t* q_list;
  size_t q_count;
  int64_t k_min, k_max;
  const int64_t* m_list; /* NULL with m_count 0: every type class */
  size_t m_count;
  size_t n_cap; /* 0: no cap */
  unsigned jobs;
} hk_sweep_spec;

typedef struct hk_sweep_summary {
  size_t analyzed, skipped;
  size_t tt_injective_false, direct_sum_false;
  size_t criterion_mismatches, identity_failures, theorem_violations;
} hk_sweep_summary;

/* Identity states. */
#define HK_IDENTITY_FAILED 0
#define HK_IDENTITY_PASSED 1
#define HK_IDENTITY_NOT_EVALUATED (-1)

HK_API const char* hk_last_error(void);
HK_API const char* hk_status_name(hk_status status);
HK_API hk_status hk_parse_format(const char* name, hk_format* out);

HK_API hk_status hk_analyze(int64_t q, int64_t k, int64_t m, hk_analysis** out);
HK_API void hk_analysis_free(hk_analysis* a);
HK_API hk_status hk_analysis_summary(const hk_analysis* a, hk_summary* out);
HK_API size_t hk_analysis_identity_count(const hk_analysis* a);
/* name stays valid for the lifetime of the handle. */
HK_API hk_status hk_analysis_identity(const hk_analysis* a, size_t index, const char** name, int* state);
HK_API size_t hk_analysis_slope_count(const hk_analysis* a);
HK_API hk_status hk_analysis_slope(const hk_analysis* a, size_t index, int64_t* num, int64_t* den, size_t* mult);

/* Single-tuple document; parameter errors become a skipped record. */
HK_API hk_status hk_analyze_document(int64_t q, int64_t k, int64_t m, hk_document** out);
HK_API hk_status hk_sweep(const hk_sweep_spec* spec, hk_document** out);
HK_API hk_status hk_document_parse_json(const char* data, size_t len, hk_document** out);
HK_API void hk_document_free(hk_document* doc);
HK_API size_t hk_document_entry_count(const hk_document* doc);
HK_API hk_status hk_document_entry(const hk_document* doc, size_t index, hk_summary* out);
HK_API size_t hk_document_skipped_count(const hk_document* doc);
/* reason stays valid for the lifetime of the handle. */
HK_API hk_status hk_document_skipped(const hk_document* doc, size_t index, int64_t* q, int64_t* k, int64_t* m,
                                     const char** reason);
HK_API hk_status hk_document_summary(const hk_document* doc, hk_sweep_summary* out);
HK_API int hk_document_equal(const hk_document* a, const hk_document* b);
/* *buf is NUL-terminated and must be released with hk_buffer_free. */
HK_API hk_status hk_document_serialize(const hk_document* doc, hk_format format, char** buf, size_t* len);
HK_API void hk_buffer_free(char* buf);

#ifdef __cplusplus
}
#endif

#endif
