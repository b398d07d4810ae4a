/* memewatch — manipulation detection over DEX token market data.
 *
 * C interface to the shared library.  Every function that can fail returns
 * an int status code; 0 (MW_OK) means success.  On failure the thread-local
 * message from mw_last_error() describes what went wrong.  Out-parameters
 * are written only on success.  Handles are opaque and must be released
 * with their matching *_destroy; strings returned through char** must be
 * released with mw_free_string.  All functions are thread-safe as long as a
 * given handle is not used concurrently from two threads.
 */
#ifndef MEMEWATCH_H
#define MEMEWATCH_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define MW_OK 0
#define MW_ERR_INVALID_ARGUMENT 1  /* bad parameter or malformed input data */
#define MW_ERR_IO 2                /* file missing/unreadable/unwritable */
#define MW_ERR_PARSE 3             /* file opened but its contents are broken */
#define MW_ERR_INTERNAL 4          /* invariant violation; please report */

/* Library version, "major.minor.patch". Static storage; do not free. */
const char* mw_version(void);

/* Message for the most recent failure on this thread ("" if none).
 * Valid until the next failing call on the same thread; do not free. */
const char* mw_last_error(void);

/* Releases a string returned through a char** out-parameter. NULL is ok. */
void mw_free_string(char* s);

/* ---- configuration ----------------------------------------------------- */

typedef struct mw_config mw_config;

/* Fresh config holding the default thresholds. */
int mw_config_create(mw_config** out);
void mw_config_destroy(mw_config* cfg);

/* Merges `key=value` lines ('#' comments, blank lines ignored). */
int mw_config_load_file(mw_config* cfg, const char* path);

/* Dotted keys, e.g. "wash.volume_surge_pct". Unknown keys fail. */
int mw_config_set(mw_config* cfg, const char* key, double value);
int mw_config_get(const mw_config* cfg, const char* key, double* out);

/* ---- datasets ----------------------------------------------------------- */

typedef struct mw_dataset mw_dataset;

/* Loads and validates the CSV inputs. economics_csv may be NULL. Row-level
 * problems are dropped and counted, never fatal; if load_report_json is
 * non-NULL it receives a JSON object with rows_loaded / rows_rejected /
 * rejected_by_reason / loaded_by_file. */
int mw_dataset_load_files(const char* tokens_csv, const char* ohlcv_csv,
                          const char* trades_csv, const char* holders_csv,
                          const char* economics_csv, mw_dataset** out,
                          char** load_report_json);

/* Loads a directory written by mw_dataset_write_dir or mw_simulate
 * (tokens.csv, ohlcv.csv, trades.csv, holders.csv, optional economics.csv). */
int mw_dataset_load_dir(const char* dir, mw_dataset** out, char** load_report_json);

/* Writes the normalized five-file form; deterministic output. */
int mw_dataset_write_dir(const mw_dataset* data, const char* dir);

int mw_dataset_token_count(const mw_dataset* data, int64_t* out);
void mw_dataset_destroy(mw_dataset* data);

/* ---- detection ----------------------------------------------------------- */

typedef struct mw_events mw_events;

/* Runs detectors over every token. kinds is "all" or a comma list of
 * wash, lpi, pnd, rug, anomaly. threads 0 = hardware concurrency; results
 * do not depend on the thread count. If run_summary_json is non-NULL it
 * receives {"stats": {...counters...}, "warnings": [...]}. */
int mw_detect(const mw_dataset* data, const mw_config* cfg, const char* kinds,
              int threads, mw_events** out, char** run_summary_json);

/* One canonical-JSON object per line; stable ordering and formatting. */
int mw_events_write_jsonl(const mw_events* events, const char* path);
int mw_events_load_jsonl(const char* path, mw_events** out);
int mw_events_count(const mw_events* events, int64_t* out);
void mw_events_destroy(mw_events* events);

/* ---- window returns ------------------------------------------------------ */

typedef struct mw_returns mw_returns;

/* Close-to-close returns over [t0, t0 + returns.window_days] for every
 * token; see the returns.csv column description in the README. */
int mw_compute_returns(const mw_dataset* data, const mw_config* cfg, int64_t t0,
                       mw_returns** out);
int mw_returns_write_csv(const mw_returns* returns, const char* path);
int mw_returns_load_csv(const char* path, mw_returns** out);
int mw_returns_count(const mw_returns* returns, int64_t* out);
void mw_returns_destroy(mw_returns* returns);

/* ---- keyword classifier --------------------------------------------------- */

/* Builds the TF-IDF keyword model from a corpus file (one token name per
 * line). stoplist_path may be NULL. cutoff 0 picks the elbow of the score
 * curve. Writes the ranked model as CSV; if cutoff_out is non-NULL it
 * receives the number of active keywords. */
int mw_build_keyword_model(const char* corpus_path, const char* stoplist_path,
                           int32_t cutoff, const char* out_model_csv,
                           int32_t* cutoff_out);

/* ---- scenario generator --------------------------------------------------- */

/* Generates a labeled synthetic dataset into out_dir (the five data CSVs
 * plus labels.csv). kind is one of organic, wash, lpi, pump_dump, rug_pull.
 * cfg may be NULL for defaults. Output is byte-identical for identical
 * arguments. */
int mw_simulate(const char* kind, uint64_t seed, int32_t token_count,
                int32_t duration_days, const mw_config* cfg, const char* out_dir);

/* ---- reporting ------------------------------------------------------------ */

/* Computes prevalence/linkage statistics and writes report.json,
 * events.jsonl and summary.csv to out_dir. Deterministic. */
int mw_report(const mw_events* events, const mw_returns* returns, const char* out_dir);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MEMEWATCH_H */
