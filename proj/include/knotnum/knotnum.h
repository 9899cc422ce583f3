/* C interface to the knotnum library. */
#ifndef KNOTNUM_KNOTNUM_H
#define KNOTNUM_KNOTNUM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(KNOTNUM_BUILDING)
#    define KN_API __declspec(dllexport)
#  else
#    define KN_API __declspec(dllimport)
#  endif
#else
#  define KN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct kn_table kn_table;

typedef enum kn_status {
    KN_OK = 0,
    KN_ERR_INVALID_ARGUMENT = 1,
    KN_ERR_PARSE = 2,
    KN_ERR_BUILD = 3,
    KN_ERR_NOT_FOUND = 4,
    KN_ERR_IO = 5,
    KN_ERR_INTERNAL = 6
} kn_status;

typedef enum kn_format { KN_FORMAT_TSV = 0, KN_FORMAT_JSON = 1 } kn_format;

typedef enum kn_verdict { KN_VERDICT_PASS = 0, KN_VERDICT_FAIL = 1, KN_VERDICT_TRUNCATED = 2 } kn_verdict;

typedef struct kn_audit_options {
    uint64_t limit;     /* goldbach, strong-twin: largest even number checked */
    int max_step;       /* twin-steps: last step checked */
    unsigned threads;   /* 0 or 1: single-threaded */
    double budget_secs; /* 0: unlimited */
} kn_audit_options;

/* Message for the last failed call on this thread; "" after a success. */
KN_API const char* kn_last_error(void);
KN_API const char* kn_status_name(kn_status status);

/* Frees any string returned through a char** out-parameter. */
KN_API void kn_string_free(char* s);

/* max_step in [1, 16]. */
KN_API kn_status kn_table_build(int max_step, kn_table** out);
KN_API void kn_table_free(kn_table* table);

KN_API int kn_table_max_step(const kn_table* table);
KN_API uint64_t kn_table_max_position(const kn_table* table);

/* KN_ERR_NOT_FOUND for 2 (reserved) and positions outside the table. */
KN_API kn_status kn_table_knot_at(const kn_table* table, uint64_t position, char** knot_out);
KN_API kn_status kn_table_position_of(const kn_table* table, const char* notation, uint64_t* position_out);
KN_API kn_status kn_table_serialize(const kn_table* table, kn_format format, char** out);

/* Puts a knot at an assigned position with no consistency checks. */
KN_API kn_status kn_table_override(kn_table* table, uint64_t position, const char* notation);

/* Compares against the built-in reference table. `report_out` receives one
 * "position<TAB>field<TAB>expected<TAB>actual" line per mismatch; either
 * out-parameter may be NULL. */
KN_API kn_status kn_table_verify(const kn_table* table, size_t* mismatches_out, size_t* rows_checked_out,
                                 char** report_out);

/* JSON record of one step: outgoing jumpers, chains, diagnostics. */
KN_API kn_status kn_table_step_json(const kn_table* table, int step, char** json_out);

/* Ascending jumpers of step n (n >= 2) as a JSON array. */
KN_API kn_status kn_jumpers_json(int step, char** json_out);

KN_API kn_status kn_normalize(const char* notation, char** canonical_out);
KN_API kn_status kn_alt_crossings(const char* notation, int64_t* out);

/* claim: "goldbach", "twin-steps" or "strong-twin". */
KN_API kn_status kn_audit(const char* claim, const kn_audit_options* options, int with_timing, char** json_out,
                          kn_verdict* verdict_out);

#ifdef __cplusplus
}
#endif

#endif
