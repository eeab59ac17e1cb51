#ifndef LPS_LPS_H
#define LPS_LPS_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#  if defined(LPS_BUILDING_LIBRARY)
#    define LPS_API __declspec(dllexport)
#  else
#    define LPS_API __declspec(dllimport)
#  endif
#else
#  define LPS_API __attribute__((visibility("default")))
#endif

/* Opaque handle holding either a stream or a precirculation. */
typedef struct lps_object lps_object;

typedef enum lps_status {
  LPS_OK = 0,
  LPS_ERR_INVALID_ARGUMENT,
  LPS_ERR_UNKNOWN_POINT,
  LPS_ERR_DUPLICATE_POINT,
  LPS_ERR_CAPACITY_EXCEEDED,
  LPS_ERR_CARRIER_MISMATCH,
  LPS_ERR_SPACE_MISMATCH,
  LPS_ERR_NOT_A_PREORDER,
  LPS_ERR_MISSING_POINT,
  LPS_ERR_NOT_MINIMAL,
  LPS_ERR_NOT_OPEN,
  LPS_ERR_INVALID_SUBSET,
  LPS_ERR_INVALID_PARTITION,
  LPS_ERR_NOT_CONTINUOUS,
  LPS_ERR_NOT_RELATED,
  LPS_ERR_NOT_CONVEX,
  LPS_ERR_NEIGHBORHOOD_CONDITION_FAILED,
  LPS_ERR_NOT_A_COVER,
  LPS_ERR_CHART_NOT_PARTIAL_ORDER,
  LPS_ERR_INCOMPATIBLE_CHARTS,
  LPS_ERR_NOT_ANTISYMMETRIC,
  LPS_ERR_NOT_A_STREAM_MAP,
  LPS_ERR_ILL_TYPED_DIAGRAM,
  LPS_ERR_PARSE,
  LPS_ERR_UNKNOWN_FORMAT,
  LPS_ERR_WRONG_KIND,
  LPS_ERR_OUT_OF_MEMORY,
  LPS_ERR_INTERNAL
} lps_status;

typedef enum lps_kind { LPS_KIND_STREAM = 0, LPS_KIND_PRECIRCULATION = 1 } lps_kind;

typedef enum lps_mode { LPS_MODE_FAST = 0, LPS_MODE_EXHAUSTIVE = 1 } lps_mode;

/* Message of the last failure on the calling thread; "" after success. */
LPS_API const char* lps_last_error(void);
LPS_API const char* lps_status_name(lps_status status);
/* Releases strings returned through char** out-parameters. */
LPS_API void lps_string_free(char* s);

/* Parses a stream or precirculation document. */
LPS_API lps_status lps_object_from_json(const char* text, lps_object** out);
/* Runs a builder description, e.g. {"builder": "directed_circle", "n": 3}.
   Documents are accepted as well. */
LPS_API lps_status lps_object_build(const char* spec_json, lps_object** out);
LPS_API lps_status lps_object_get_kind(const lps_object* obj, lps_kind* out);
LPS_API void lps_object_free(lps_object* obj);
/* Canonical serialization: sorted keys, sorted lists, trailing newline. */
LPS_API lps_status lps_object_to_json(const lps_object* obj, char** out);
/* Streams only. */
LPS_API lps_status lps_object_to_dot(const lps_object* obj, char** out);

/* which: "all", "circulation", "intervals", "antisymmetry" or "monotone".
   *passed is 1 when every selected check passes. report_json may be NULL. */
LPS_API lps_status lps_object_check(const lps_object* obj, const char* which, lps_mode mode, int* passed,
                                    char** report_json);

/* Tests x <=_U y where U is "global" or a comma-separated open set. When
   open_b is non-NULL the query is on the union of both opens and the witness
   is an alternating chain; otherwise it is a chain of star steps. witness_json
   may be NULL; max_steps caps the printed chain (0 means no cap). */
LPS_API lps_status lps_stream_query(const lps_object* obj, const char* open_a, const char* open_b, const char* x,
                                    const char* y, int max_steps, int* related, char** witness_json);

/* op: product, quotient {partition}, substream {subset}, join,
   pushforward {space, map}, pullback-cosheafify {space, map}, cosheafify,
   limit {arrows}, colimit {arrows}. args_json may be NULL when the operation
   takes no arguments. With verify set, *verified reports whether the
   structural maps are stream maps and the result has the expected universal
   structure; verified may be NULL otherwise. */
LPS_API lps_status lps_combine(const char* op, const lps_object* const* inputs, int input_count, const char* args_json,
                               int verify, int* verified, lps_object** out);

/* Randomized law checks over count generated streams of at most max_points points. */
LPS_API lps_status lps_selfcheck(unsigned long long seed, int count, int max_points, int* passed, char** report_json);

#ifdef __cplusplus
}
#endif

#endif
