// C ABI shim: every entry point translates exceptions into status codes and
// keeps the failure message in a thread-local buffer for mw_last_error().
// No exception may cross this boundary.

#include "memewatch/memewatch.h"

#include <cstdint>
#include <cstring>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "analytics.hpp"
#include "classifier.hpp"
#include "config.hpp"
#include "csv.hpp"
#include "dataset.hpp"
#include "error.hpp"
#include "events_io.hpp"
#include "pipeline.hpp"
#include "scenario.hpp"

struct mw_config {
  mw::Config impl;
};
struct mw_dataset {
  mw::Dataset impl;
};
struct mw_events {
  std::vector<mw::DetectionEvent> impl;
};
struct mw_returns {
  std::vector<mw::ReturnRecord> impl;
};

namespace {

thread_local std::string g_last_error;

int code_of(const mw::Error& e) {
  switch (e.code()) {
    case mw::ErrorCode::InvalidArgument: return MW_ERR_INVALID_ARGUMENT;
    case mw::ErrorCode::Io: return MW_ERR_IO;
    case mw::ErrorCode::Parse: return MW_ERR_PARSE;
    case mw::ErrorCode::Internal: return MW_ERR_INTERNAL;
  }
  return MW_ERR_INTERNAL;
}

int fail(int code, std::string message) {
  g_last_error = std::move(message);
  return code;
}

// Runs fn() under the exception net.
template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const mw::Error& e) {
    return fail(code_of(e), e.what());
  } catch (const std::exception& e) {
    return fail(MW_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(MW_ERR_INTERNAL, "unknown exception");
  }
}

int require(bool ok, const char* what) {
  return ok ? MW_OK : fail(MW_ERR_INVALID_ARGUMENT, what);
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string json_string_map(const std::map<std::string, std::int64_t>& m) {
  std::string j = "{";
  bool first = true;
  for (const auto& [k, v] : m) {
    if (!first) j.push_back(',');
    first = false;
    j += mw::json_escape(k) + ":" + std::to_string(v);
  }
  j.push_back('}');
  return j;
}

std::string load_report_json(const mw::LoadReport& rep) {
  std::string j = "{";
  j += "\"loaded_by_file\":" + json_string_map(rep.loaded_by_file);
  j += ",\"rejected_by_reason\":" + json_string_map(rep.rejected_by_reason);
  j += ",\"rows_loaded\":" + std::to_string(rep.rows_loaded);
  j += ",\"rows_rejected\":" + std::to_string(rep.rows_rejected);
  j += "}";
  return j;
}

std::string run_summary_json(const mw::DetectionRun& run) {
  std::string j = "{\"stats\":" + json_string_map(run.stats) + ",\"warnings\":[";
  for (std::size_t i = 0; i < run.warnings.size(); ++i) {
    if (i) j.push_back(',');
    j += mw::json_escape(run.warnings[i]);
  }
  j += "]}";
  return j;
}

}  // namespace

extern "C" {

const char* mw_version(void) { return "1.0.0"; }

const char* mw_last_error(void) { return g_last_error.c_str(); }

void mw_free_string(char* s) { delete[] s; }

/* ---- configuration ----------------------------------------------------- */

int mw_config_create(mw_config** out) {
  if (int rc = require(out != nullptr, "out must not be NULL")) return rc;
  return guarded([&] {
    *out = new mw_config{};
    return MW_OK;
  });
}

void mw_config_destroy(mw_config* cfg) { delete cfg; }

int mw_config_load_file(mw_config* cfg, const char* path) {
  if (int rc = require(cfg && path, "cfg and path must not be NULL")) return rc;
  return guarded([&] {
    cfg->impl.load_file(path);
    return MW_OK;
  });
}

int mw_config_set(mw_config* cfg, const char* key, double value) {
  if (int rc = require(cfg && key, "cfg and key must not be NULL")) return rc;
  return guarded([&] {
    cfg->impl.set(key, value);
    return MW_OK;
  });
}

int mw_config_get(const mw_config* cfg, const char* key, double* out) {
  if (int rc = require(cfg && key && out, "cfg, key and out must not be NULL")) return rc;
  return guarded([&] {
    *out = cfg->impl.get(key);
    return MW_OK;
  });
}

/* ---- datasets ----------------------------------------------------------- */

int mw_dataset_load_files(const char* tokens_csv, const char* ohlcv_csv,
                          const char* trades_csv, const char* holders_csv,
                          const char* economics_csv, mw_dataset** out,
                          char** load_report) {
  if (int rc = require(tokens_csv && ohlcv_csv && trades_csv && holders_csv && out,
                       "tokens/ohlcv/trades/holders paths and out must not be NULL"))
    return rc;
  return guarded([&] {
    mw::LoadPaths paths;
    paths.tokens = tokens_csv;
    paths.ohlcv = ohlcv_csv;
    paths.trades = trades_csv;
    paths.holders = holders_csv;
    if (economics_csv) paths.economics = economics_csv;
    mw::LoadReport rep;
    auto ds = std::make_unique<mw_dataset>();
    ds->impl = mw::load_dataset(paths, &rep);
    if (load_report) *load_report = dup_string(load_report_json(rep));
    *out = ds.release();
    return MW_OK;
  });
}

int mw_dataset_load_dir(const char* dir, mw_dataset** out, char** load_report) {
  if (int rc = require(dir && out, "dir and out must not be NULL")) return rc;
  return guarded([&] {
    mw::LoadReport rep;
    auto ds = std::make_unique<mw_dataset>();
    ds->impl = mw::load_dataset_dir(dir, &rep);
    if (load_report) *load_report = dup_string(load_report_json(rep));
    *out = ds.release();
    return MW_OK;
  });
}

int mw_dataset_write_dir(const mw_dataset* data, const char* dir) {
  if (int rc = require(data && dir, "data and dir must not be NULL")) return rc;
  return guarded([&] {
    mw::write_dataset(data->impl, dir);
    return MW_OK;
  });
}

int mw_dataset_token_count(const mw_dataset* data, int64_t* out) {
  if (int rc = require(data && out, "data and out must not be NULL")) return rc;
  *out = static_cast<int64_t>(data->impl.tokens.size());
  return MW_OK;
}

void mw_dataset_destroy(mw_dataset* data) { delete data; }

/* ---- detection ----------------------------------------------------------- */

int mw_detect(const mw_dataset* data, const mw_config* cfg, const char* kinds,
              int threads, mw_events** out, char** run_summary) {
  if (int rc = require(data && cfg && kinds && out, "data, cfg, kinds and out must not be NULL"))
    return rc;
  return guarded([&] {
    mw::DetectSelection sel = mw::parse_detect_kinds(kinds);
    mw::DetectionRun run = mw::run_detectors(data->impl, cfg->impl, sel, threads);
    if (run_summary) *run_summary = dup_string(run_summary_json(run));
    *out = new mw_events{std::move(run.events)};
    return MW_OK;
  });
}

int mw_events_write_jsonl(const mw_events* events, const char* path) {
  if (int rc = require(events && path, "events and path must not be NULL")) return rc;
  return guarded([&] {
    mw::write_events_jsonl(events->impl, path);
    return MW_OK;
  });
}

int mw_events_load_jsonl(const char* path, mw_events** out) {
  if (int rc = require(path && out, "path and out must not be NULL")) return rc;
  return guarded([&] {
    *out = new mw_events{mw::load_events_jsonl(path)};
    return MW_OK;
  });
}

int mw_events_count(const mw_events* events, int64_t* out) {
  if (int rc = require(events && out, "events and out must not be NULL")) return rc;
  *out = static_cast<int64_t>(events->impl.size());
  return MW_OK;
}

void mw_events_destroy(mw_events* events) { delete events; }

/* ---- window returns ------------------------------------------------------ */

int mw_compute_returns(const mw_dataset* data, const mw_config* cfg, int64_t t0,
                       mw_returns** out) {
  if (int rc = require(data && cfg && out, "data, cfg and out must not be NULL")) return rc;
  return guarded([&] {
    *out = new mw_returns{mw::compute_returns(data->impl, t0, cfg->impl)};
    return MW_OK;
  });
}

int mw_returns_write_csv(const mw_returns* returns, const char* path) {
  if (int rc = require(returns && path, "returns and path must not be NULL")) return rc;
  return guarded([&] {
    mw::write_returns_csv(returns->impl, path);
    return MW_OK;
  });
}

int mw_returns_load_csv(const char* path, mw_returns** out) {
  if (int rc = require(path && out, "path and out must not be NULL")) return rc;
  return guarded([&] {
    *out = new mw_returns{mw::load_returns_csv(path)};
    return MW_OK;
  });
}

int mw_returns_count(const mw_returns* returns, int64_t* out) {
  if (int rc = require(returns && out, "returns and out must not be NULL")) return rc;
  *out = static_cast<int64_t>(returns->impl.size());
  return MW_OK;
}

void mw_returns_destroy(mw_returns* returns) { delete returns; }

/* ---- keyword classifier --------------------------------------------------- */

int mw_build_keyword_model(const char* corpus_path, const char* stoplist_path,
                           int32_t cutoff, const char* out_model_csv,
                           int32_t* cutoff_out) {
  if (int rc = require(corpus_path && out_model_csv,
                       "corpus_path and out_model_csv must not be NULL"))
    return rc;
  if (int rc = require(cutoff >= 0, "cutoff must be >= 0")) return rc;
  return guarded([&] {
    std::vector<std::string> corpus = mw::load_corpus(corpus_path);
    std::set<std::string> stop;
    if (stoplist_path) stop = mw::load_stoplist(stoplist_path);
    mw::KeywordModel model =
        mw::build_keyword_model(corpus, stop, static_cast<std::size_t>(cutoff));
    mw::write_model_csv(model, out_model_csv);
    if (cutoff_out) *cutoff_out = static_cast<int32_t>(model.cutoff_k);
    return MW_OK;
  });
}

/* ---- scenario generator --------------------------------------------------- */

int mw_simulate(const char* kind, uint64_t seed, int32_t token_count,
                int32_t duration_days, const mw_config* cfg, const char* out_dir) {
  if (int rc = require(kind && out_dir, "kind and out_dir must not be NULL")) return rc;
  return guarded([&] {
    auto parsed = mw::parse_scenario_kind(kind);
    if (!parsed)
      mw::raise(mw::ErrorCode::InvalidArgument,
                std::string("unknown scenario kind '") + kind +
                    "' (expected organic, wash, lpi, pump_dump, rug_pull)");
    mw::ScenarioSpec spec;
    spec.kind = *parsed;
    spec.seed = seed;
    spec.token_count = token_count;
    spec.duration_days = duration_days;
    mw::Config defaults;
    const mw::Config& use = cfg ? cfg->impl : defaults;
    mw::ScenarioResult result = mw::generate_scenario(spec, use);
    mw::write_scenario_dir(result, out_dir);
    return MW_OK;
  });
}

/* ---- reporting ------------------------------------------------------------ */

int mw_report(const mw_events* events, const mw_returns* returns, const char* out_dir) {
  if (int rc = require(events && returns && out_dir,
                       "events, returns and out_dir must not be NULL"))
    return rc;
  return guarded([&] {
    mw::PrevalenceReport prev = mw::prevalence(returns->impl, events->impl);
    mw::render_report(prev, returns->impl, events->impl, out_dir);
    return MW_OK;
  });
}

} /* extern "C" */
