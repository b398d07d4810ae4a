// memewatch CLI.  Thin shell over the C API: parse arguments, call the
// library, map status codes to exit codes (0 ok, 1 bad input, 2 internal).

#include <cstdint>
#include <cstdio>
#include <functional>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "memewatch/memewatch.h"

namespace {

struct ConfigDeleter {
  void operator()(mw_config* p) const { mw_config_destroy(p); }
};
struct DatasetDeleter {
  void operator()(mw_dataset* p) const { mw_dataset_destroy(p); }
};
struct EventsDeleter {
  void operator()(mw_events* p) const { mw_events_destroy(p); }
};
struct ReturnsDeleter {
  void operator()(mw_returns* p) const { mw_returns_destroy(p); }
};
using ConfigPtr = std::unique_ptr<mw_config, ConfigDeleter>;
using DatasetPtr = std::unique_ptr<mw_dataset, DatasetDeleter>;
using EventsPtr = std::unique_ptr<mw_events, EventsDeleter>;
using ReturnsPtr = std::unique_ptr<mw_returns, ReturnsDeleter>;

// Owns a char* the library allocated for us.
struct CString {
  char* ptr = nullptr;
  ~CString() { mw_free_string(ptr); }
  char** out() { return &ptr; }
  const char* get() const { return ptr ? ptr : ""; }
};

int exit_code_for(int status) { return status == MW_ERR_INTERNAL ? 2 : 1; }

// Report a failed call: prints the library's message, yields the exit code.
int report_failure(int status) {
  std::fprintf(stderr, "error: %s\n", mw_last_error());
  return exit_code_for(status);
}

int run_ingest(const mw_config*, const std::string& tokens, const std::string& ohlcv,
               const std::string& trades, const std::string& holders,
               const std::string& economics, const std::string& out_dir) {
  DatasetPtr data;
  {
    mw_dataset* raw = nullptr;
    CString report;
    int rc = mw_dataset_load_files(tokens.c_str(), ohlcv.c_str(), trades.c_str(),
                                   holders.c_str(),
                                   economics.empty() ? nullptr : economics.c_str(), &raw,
                                   report.out());
    if (rc != MW_OK) return report_failure(rc);
    data.reset(raw);
    std::printf("%s\n", report.get());
  }
  if (int rc = mw_dataset_write_dir(data.get(), out_dir.c_str()); rc != MW_OK)
    return report_failure(rc);
  return 0;
}

int run_classify(const std::string& corpus, const std::string& stoplist, int cutoff,
                 const std::string& out_path) {
  int32_t active = 0;
  int rc = mw_build_keyword_model(corpus.c_str(), stoplist.empty() ? nullptr : stoplist.c_str(),
                                  cutoff, out_path.c_str(), &active);
  if (rc != MW_OK) return report_failure(rc);
  std::printf("{\"active_keywords\":%d}\n", active);
  return 0;
}

int run_returns(const mw_config* cfg, const std::string& data_dir, std::int64_t t0,
                const std::string& out_path) {
  mw_dataset* raw_data = nullptr;
  if (int rc = mw_dataset_load_dir(data_dir.c_str(), &raw_data, nullptr); rc != MW_OK)
    return report_failure(rc);
  DatasetPtr data(raw_data);

  mw_returns* raw_returns = nullptr;
  if (int rc = mw_compute_returns(data.get(), cfg, t0, &raw_returns); rc != MW_OK)
    return report_failure(rc);
  ReturnsPtr returns(raw_returns);

  if (int rc = mw_returns_write_csv(returns.get(), out_path.c_str()); rc != MW_OK)
    return report_failure(rc);
  int64_t n = 0;
  mw_returns_count(returns.get(), &n);
  std::printf("{\"tokens\":%lld}\n", static_cast<long long>(n));
  return 0;
}

int run_detect(const mw_config* cfg, const std::string& data_dir, const std::string& kinds,
               int threads, const std::string& out_path) {
  mw_dataset* raw_data = nullptr;
  if (int rc = mw_dataset_load_dir(data_dir.c_str(), &raw_data, nullptr); rc != MW_OK)
    return report_failure(rc);
  DatasetPtr data(raw_data);

  mw_events* raw_events = nullptr;
  CString summary;
  int rc = mw_detect(data.get(), cfg, kinds.c_str(), threads, &raw_events, summary.out());
  if (rc != MW_OK) return report_failure(rc);
  EventsPtr events(raw_events);

  if (int wrc = mw_events_write_jsonl(events.get(), out_path.c_str()); wrc != MW_OK)
    return report_failure(wrc);
  std::printf("%s\n", summary.get());
  return 0;
}

int run_simulate(const mw_config* cfg, const std::string& kind, std::uint64_t seed, int tokens,
                 int days, const std::string& out_dir) {
  int rc = mw_simulate(kind.c_str(), seed, tokens, days, cfg, out_dir.c_str());
  if (rc != MW_OK) return report_failure(rc);
  std::printf("{\"kind\":\"%s\",\"tokens\":%d,\"days\":%d}\n", kind.c_str(), tokens, days);
  return 0;
}

int run_report(const std::string& events_path, const std::string& returns_path,
               const std::string& out_dir) {
  mw_events* raw_events = nullptr;
  if (int rc = mw_events_load_jsonl(events_path.c_str(), &raw_events); rc != MW_OK)
    return report_failure(rc);
  EventsPtr events(raw_events);

  mw_returns* raw_returns = nullptr;
  if (int rc = mw_returns_load_csv(returns_path.c_str(), &raw_returns); rc != MW_OK)
    return report_failure(rc);
  ReturnsPtr returns(raw_returns);

  if (int rc = mw_report(events.get(), returns.get(), out_dir.c_str()); rc != MW_OK)
    return report_failure(rc);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string("memewatch ") + mw_version() +
               " — manipulation detection over DEX token market data"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path,
                 "threshold overrides, flat key=value lines ('#' comments)");

  // ingest
  auto* ingest = app.add_subcommand("ingest", "validate raw CSVs, write a normalized dataset");
  std::string in_tokens, in_ohlcv, in_trades, in_holders, in_economics, ingest_out;
  ingest->add_option("--tokens", in_tokens, "tokens.csv")->required();
  ingest->add_option("--ohlcv", in_ohlcv, "hourly OHLCV csv")->required();
  ingest->add_option("--trades", in_trades, "trades csv")->required();
  ingest->add_option("--holders", in_holders, "holder snapshot csv")->required();
  ingest->add_option("--economics", in_economics, "economics csv (optional)");
  ingest->add_option("--out", ingest_out, "output dataset directory")->required();

  // classify
  auto* classify = app.add_subcommand("classify", "build the TF-IDF keyword model");
  std::string cls_corpus, cls_stoplist, cls_out;
  int cls_cutoff = 0;
  classify->add_option("--corpus", cls_corpus, "token names, one per line")->required();
  classify->add_option("--stoplist", cls_stoplist, "words to exclude, one per line");
  classify->add_option("--cutoff", cls_cutoff, "keep top K keywords (0 = elbow)")
      ->check(CLI::NonNegativeNumber);
  classify->add_option("--out", cls_out, "model csv path")->required();

  // returns
  auto* returns = app.add_subcommand("returns", "window returns for every token");
  std::string ret_data, ret_out;
  std::int64_t ret_t0 = 0;
  double ret_window = -1;
  returns->add_option("--data", ret_data, "dataset directory")->required();
  returns->add_option("--t0", ret_t0, "window start, unix seconds")->required();
  returns->add_option("--window-days", ret_window, "window length (default from config)");
  returns->add_option("--out", ret_out, "returns csv path")->required();

  // detect
  auto* detect = app.add_subcommand("detect", "run manipulation detectors");
  std::string det_data, det_kind = "all", det_out;
  int det_threads = 0;
  detect->add_option("--data", det_data, "dataset directory")->required();
  detect->add_option("--kind", det_kind, "all or comma list: wash,lpi,pnd,rug,anomaly");
  detect->add_option("--threads", det_threads, "worker threads (0 = hardware)")
      ->check(CLI::Range(0, 1024));
  detect->add_option("--out", det_out, "events jsonl path")->required();

  // simulate
  auto* simulate = app.add_subcommand("simulate", "generate a labeled synthetic dataset");
  std::string sim_kind, sim_out;
  std::uint64_t sim_seed = 0;
  int sim_tokens = 1, sim_days = 60;
  simulate->add_option("--kind", sim_kind, "organic|wash|lpi|pump_dump|rug_pull")->required();
  simulate->add_option("--seed", sim_seed, "rng seed")->required();
  simulate->add_option("--tokens", sim_tokens, "token count (default 1)");
  simulate->add_option("--days", sim_days, "duration in days (default 60)");
  simulate->add_option("--out", sim_out, "output dataset directory")->required();

  // report
  auto* report = app.add_subcommand("report", "prevalence/linkage statistics and summaries");
  std::string rep_events, rep_returns, rep_out;
  report->add_option("--events", rep_events, "events jsonl")->required();
  report->add_option("--returns", rep_returns, "returns csv")->required();
  report->add_option("--out", rep_out, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  ConfigPtr cfg;
  {
    mw_config* raw = nullptr;
    if (int rc = mw_config_create(&raw); rc != MW_OK) return report_failure(rc);
    cfg.reset(raw);
  }
  if (!config_path.empty())
    if (int rc = mw_config_load_file(cfg.get(), config_path.c_str()); rc != MW_OK)
      return report_failure(rc);

  if (ingest->parsed())
    return run_ingest(cfg.get(), in_tokens, in_ohlcv, in_trades, in_holders, in_economics,
                      ingest_out);
  if (classify->parsed()) return run_classify(cls_corpus, cls_stoplist, cls_cutoff, cls_out);
  if (returns->parsed()) {
    if (ret_window >= 0)
      if (int rc = mw_config_set(cfg.get(), "returns.window_days", ret_window); rc != MW_OK)
        return report_failure(rc);
    return run_returns(cfg.get(), ret_data, ret_t0, ret_out);
  }
  if (detect->parsed()) return run_detect(cfg.get(), det_data, det_kind, det_threads, det_out);
  if (simulate->parsed())
    return run_simulate(cfg.get(), sim_kind, sim_seed, sim_tokens, sim_days, sim_out);
  if (report->parsed()) return run_report(rep_events, rep_returns, rep_out);
  return 1;  // unreachable: require_subcommand(1)
}
