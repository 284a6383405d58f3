/* C interface to the order-type graph library. Every function that can fail
 * returns an otg_status; on failure otg_last_error() describes the problem
 * for the calling thread. Strings handed out through char** parameters are
 * owned by the caller and released with otg_string_free. */
#ifndef OTG_OTG_H
#define OTG_OTG_H

#include <stddef.h>
#include <stdint.h>

#if defined(OTG_BUILDING_LIBRARY)
#define OTG_API __attribute__((visibility("default")))
#else
#define OTG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum otg_status {
  OTG_OK = 0,
  OTG_ERR_VERIFICATION = 1,
  OTG_ERR_INVALID_ARGUMENT = 2,
  OTG_INCONCLUSIVE = 3,
  OTG_ERR_PARSE = 4,
  OTG_ERR_CAPACITY = 5,
  OTG_ERR_INTERNAL = 6
} otg_status;

typedef enum otg_format { OTG_FORMAT_JSON = 0, OTG_FORMAT_DOT = 1, OTG_FORMAT_TABLE = 2 } otg_format;

/* A graph or digraph whose vertices are increasing tuples. */
typedef struct otg_graph otg_graph;

typedef void (*otg_progress_fn)(const char* line, void* user);

typedef struct otg_suite_config {
  uint64_t seed;
  uint64_t count;
  size_t max_length;
  uint64_t max_value; /* values drawn from 0..max_value-1 */
  uint64_t max_n;     /* embeddings checked for N = 3..max_n */
  size_t threads;
} otg_suite_config;

OTG_API const char* otg_version(void);
OTG_API const char* otg_last_error(void);
OTG_API const char* otg_status_name(otg_status status);
OTG_API void otg_string_free(char* s);
OTG_API otg_suite_config otg_suite_defaults(void);

OTG_API otg_status otg_graph_shift(size_t r, uint64_t n, otg_graph** out);
OTG_API otg_status otg_graph_lshift(size_t k, uint64_t n, otg_graph** out);
OTG_API otg_status otg_graph_rshift(size_t k, uint64_t n, otg_graph** out);
/* Order-type graph of otp(a, b) on increasing len-tuples below theta. */
OTG_API otg_status otg_graph_order_type(const uint64_t* a, const uint64_t* b, size_t len,
                                        uint64_t theta, otg_graph** out);
OTG_API otg_status otg_graph_from_json(const char* text, otg_graph** out);
OTG_API otg_status otg_graph_export(const otg_graph* g, otg_format format, char** out);
OTG_API size_t otg_graph_order(const otg_graph* g);
OTG_API size_t otg_graph_size(const otg_graph* g);
OTG_API int otg_graph_directed(const otg_graph* g);
OTG_API int otg_graph_equal(const otg_graph* x, const otg_graph* y);
OTG_API void otg_graph_free(otg_graph* g);

/* Exact chromatic number. Writes a JSON report in both the exact and the
 * OTG_INCONCLUSIVE case. budget 0 selects the library default. */
OTG_API otg_status otg_chromatic(const otg_graph* g, uint64_t budget, otg_progress_fn progress,
                                 void* user, char** report);

OTG_API otg_status otg_decompose(const uint64_t* a, const uint64_t* b, size_t len, char** report);
/* Sh_k(n) into the order-type graph of otp(a, b), k from the orderly cover. */
OTG_API otg_status otg_embed(const uint64_t* a, const uint64_t* b, size_t len, uint64_t n,
                             char** report);

/* OTG_ERR_VERIFICATION when any invariant fails; the report is still written. */
OTG_API otg_status otg_suite_run(const otg_suite_config* config, otg_format format, char** report);
OTG_API otg_status otg_suite_run_pair(const otg_suite_config* config, const uint64_t* a,
                                      const uint64_t* b, size_t len, otg_format format,
                                      char** report);

/* Re-checks an artifact produced by this library. graph_json may be NULL
 * unless the artifact is a colouring or chi report. */
OTG_API otg_status otg_verify(const char* artifact_json, const char* graph_json, uint64_t budget,
                              char** message);

#ifdef __cplusplus
}
#endif

#endif
