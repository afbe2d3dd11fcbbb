/* C interface to the sqfmaps library. Every call returns an sqf_status; on
   failure sqf_last_error() describes the problem. Strings handed out through
   `char** out` parameters are owned by the caller and released with
   sqf_string_free(). */
#ifndef SQFMAPS_H
#define SQFMAPS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SQF_API __declspec(dllexport)
#else
#define SQF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sqf_status {
  SQF_OK = 0,
  SQF_ERR_INVALID_ARGUMENT = 1, /* bad parameter, unknown id, unreadable file */
  SQF_ERR_CAP_EXCEEDED = 2,     /* group larger than the element cap */
  SQF_ERR_PARSE = 3,            /* malformed generator file; see sqf_last_error_line */
  SQF_ERR_VERIFICATION = 4,     /* an internal consistency check failed */
  SQF_ERR_INTERNAL = 5          /* anything else, including allocation failure */
} sqf_status;

typedef enum sqf_format {
  SQF_FORMAT_TEXT = 0,
  SQF_FORMAT_RECORDS = 1, /* one JSON object per line */
  SQF_FORMAT_DOT = 2      /* map command only */
} sqf_format;

/* Shared run settings: element cap, RNG seed, worker count, wall-time display. */
typedef struct sqf_config sqf_config;
/* A finite permutation group with its elements enumerated. */
typedef struct sqf_group sqf_group;

SQF_API const char* sqf_version(void);

/* Message for the last failed call on this thread ("" if none). Valid until
   the next call on the same thread. */
SQF_API const char* sqf_last_error(void);
/* 1-based line of the last SQF_ERR_PARSE on this thread, else 0. */
SQF_API size_t sqf_last_error_line(void);
SQF_API void sqf_string_free(char* s);

SQF_API sqf_status sqf_config_new(sqf_config** out);
SQF_API void sqf_config_free(sqf_config* cfg);
SQF_API sqf_status sqf_config_set_cap(sqf_config* cfg, size_t cap);
SQF_API sqf_status sqf_config_set_seed(sqf_config* cfg, uint64_t seed);
SQF_API sqf_status sqf_config_set_workers(sqf_config* cfg, unsigned workers);
SQF_API sqf_status sqf_config_set_show_time(sqf_config* cfg, int show_time);

/* Generator files: "degree <d>" then one permutation per line in 0-based
   cycle notation; blank lines and '#' comments are ignored. */
SQF_API sqf_status sqf_group_from_genfile_text(const sqf_config* cfg, const char* text, sqf_group** out);
SQF_API sqf_status sqf_group_from_genfile_path(const sqf_config* cfg, const char* path, sqf_group** out);
SQF_API void sqf_group_free(sqf_group* g);
SQF_API sqf_status sqf_group_order(const sqf_group* g, size_t* out);
SQF_API sqf_status sqf_group_degree(const sqf_group* g, size_t* out);

/* Order, Sylow tags, hypothesis verdict with witnesses and the existence of
   regular triples, reversing triples and rotary pairs. */
SQF_API sqf_status sqf_analyze(const sqf_config* cfg, const sqf_group* g, sqf_format fmt, char** out);

/* Families "C31", "C33", "C34". Returns SQF_ERR_INVALID_ARGUMENT with a
   diagnostic when n is not a valid parameter for the family. */
SQF_API sqf_status sqf_family_check(const char* family, size_t n);
/* One row per n: "n | chi | factored chi | squarefree" in text form. With
   squarefree_only set, rows whose chi is not square-free are dropped. */
SQF_API sqf_status sqf_family_table(const sqf_config* cfg, const char* family, const size_t* ns, size_t count,
                                    int squarefree_only, sqf_format fmt, char** out);
/* Map built from the family's triple: counts, chi, valency, face length and
   graph tag; SQF_FORMAT_DOT emits the underlying graph. */
SQF_API sqf_status sqf_map(const sqf_config* cfg, const char* family, size_t n, sqf_format fmt, char** out);

/* Claim ids accepted by sqf_verify, in suite order. */
SQF_API size_t sqf_claim_count(void);
SQF_API const char* sqf_claim_id(size_t i);
/* Runs one claim, or every claim for "all", and appends a summary. *refuted
   is set to 1 when any claim is refuted. */
SQF_API sqf_status sqf_verify(const sqf_config* cfg, const char* claim, size_t lmax, sqf_format fmt, char** out,
                              int* refuted);

#ifdef __cplusplus
}
#endif

#endif
