#ifndef PSIMINER_PSIMINER_H
#define PSIMINER_PSIMINER_H

/*
 * C interface of the psiminer library.
 *
 * Objects are opaque handles created and released through this API. Every
 * fallible call returns a psm_status; on failure a description of the last
 * error on the calling thread is available from psm_last_error(). Strings
 * returned through `char**` out-parameters are owned by the caller and must
 * be released with psm_string_free().
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PSIMINER_BUILDING_LIBRARY)
#    define PSM_API __declspec(dllexport)
#  else
#    define PSM_API __declspec(dllimport)
#  endif
#else
#  define PSM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values 2 and 3 double as the command-line exit codes. */
typedef enum psm_status {
  PSM_OK = 0,
  PSM_ERR_INVALID_ARGUMENT = 1,
  PSM_ERR_CONFIG = 2,
  PSM_ERR_IO = 3,
  PSM_ERR_PARSE = 4,
  PSM_ERR_INTERNAL = 5
} psm_status;

typedef struct psm_config psm_config;
typedef struct psm_stats psm_stats;

PSM_API const char* psm_version(void);

/* Message for the most recent failure on this thread, "" if none. */
PSM_API const char* psm_last_error(void);

PSM_API void psm_string_free(char* s);

/* ---- configuration ---- */

/* Parses a JSON configuration. Relative paths resolve against base_dir when
 * it is non-NULL and non-empty. */
PSM_API psm_status psm_config_parse(const char* json, size_t len, const char* base_dir,
                                    psm_config** out);
/* Reads a configuration file; relative paths resolve against its directory. */
PSM_API psm_status psm_config_load(const char* path, psm_config** out);
PSM_API psm_status psm_config_set_parallelism(psm_config* config, uint32_t parallelism);
PSM_API void psm_config_free(psm_config* config);

/* Human-readable discovery plan (splits, projects, output files). Writes
 * nothing to disk. */
PSM_API psm_status psm_plan(const psm_config* config, char** out_text);

/* ---- running ---- */

/* Processes the configured corpus and writes the dataset files plus
 * stats.json. */
PSM_API psm_status psm_run(const psm_config* config, psm_stats** out);

/* Runs the per-file stages on one in-memory source and returns the formatted
 * sample lines (possibly empty). Parse failures return PSM_ERR_PARSE. */
PSM_API psm_status psm_mine_source(const psm_config* config, const char* source,
                                   size_t len, char** out_lines);

/* Parses `source` and reports whether the concrete syntax tree reproduces it
 * byte for byte. Parse failures return PSM_ERR_PARSE. */
PSM_API psm_status psm_check_lossless(const char* source, size_t len, int* out_ok);

/* ---- statistics ---- */

/* Counter by stats.json key, e.g. "samples_written" or
 * "rejected_by_tree_size". PSM_ERR_INVALID_ARGUMENT for unknown names. */
PSM_API psm_status psm_stats_counter(const psm_stats* stats, const char* name,
                                     uint64_t* out);
PSM_API psm_status psm_stats_json(const psm_stats* stats, char** out);
PSM_API psm_status psm_stats_summary(const psm_stats* stats, char** out);
PSM_API size_t psm_stats_diagnostic_count(const psm_stats* stats);
/* Borrowed pointer valid until psm_stats_free; NULL when out of range. */
PSM_API const char* psm_stats_diagnostic(const psm_stats* stats, size_t index);
PSM_API void psm_stats_free(psm_stats* stats);

#ifdef __cplusplus
}
#endif

#endif /* PSIMINER_PSIMINER_H */
