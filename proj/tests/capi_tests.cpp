// Exercises the shared library through its C interface only — no internal
// headers.  If this compiles and passes, the ABI is usable on its own.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memewatch/memewatch.h>

#include <algorithm>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "unit/temp_dir.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  REQUIRE(out.good());
}

struct ConfigHandle {
  mw_config* ptr = nullptr;
  ConfigHandle() { REQUIRE(mw_config_create(&ptr) == MW_OK); }
  ~ConfigHandle() { mw_config_destroy(ptr); }
};

}  // namespace

TEST_CASE("version and error text basics") {
  CHECK(std::string(mw_version()) == "1.0.0");
  mw_free_string(nullptr);  // must be a no-op
}

TEST_CASE("config: defaults, set/get, file merge, failure modes") {
  ConfigHandle cfg;
  double v = 0;
  REQUIRE(mw_config_get(cfg.ptr, "wash.volume_surge_pct", &v) == MW_OK);
  CHECK(v == 500.0);

  REQUIRE(mw_config_set(cfg.ptr, "rug.min_drop_pct", 98.5) == MW_OK);
  REQUIRE(mw_config_get(cfg.ptr, "rug.min_drop_pct", &v) == MW_OK);
  CHECK(v == 98.5);

  CHECK(mw_config_set(cfg.ptr, "no.such.key", 1) == MW_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(mw_last_error()) > 0);

  TempDir dir("capi");
  spit(dir.file("ok.cfg"), "# comment\nlpi.low_volume_usd = 750\n\n");
  REQUIRE(mw_config_load_file(cfg.ptr, dir.file("ok.cfg").c_str()) == MW_OK);
  REQUIRE(mw_config_get(cfg.ptr, "lpi.low_volume_usd", &v) == MW_OK);
  CHECK(v == 750.0);

  CHECK(mw_config_load_file(cfg.ptr, dir.file("absent.cfg").c_str()) == MW_ERR_IO);
  spit(dir.file("broken.cfg"), "lpi.low_volume_usd : 750\n");
  CHECK(mw_config_load_file(cfg.ptr, dir.file("broken.cfg").c_str()) == MW_ERR_PARSE);
}

TEST_CASE("null arguments are rejected, not dereferenced") {
  CHECK(mw_config_create(nullptr) == MW_ERR_INVALID_ARGUMENT);
  CHECK(mw_config_get(nullptr, "x", nullptr) == MW_ERR_INVALID_ARGUMENT);
  CHECK(mw_dataset_load_dir(nullptr, nullptr, nullptr) == MW_ERR_INVALID_ARGUMENT);
  CHECK(mw_events_load_jsonl(nullptr, nullptr) == MW_ERR_INVALID_ARGUMENT);
  CHECK(mw_simulate(nullptr, 0, 1, 3, nullptr, nullptr) == MW_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(mw_last_error()) > 0);
}

TEST_CASE("simulate is deterministic and rejects unknown kinds") {
  TempDir a("capi");
  TempDir b("capi");
  REQUIRE(mw_simulate("organic", 5, 2, 4, nullptr, a.str().c_str()) == MW_OK);
  REQUIRE(mw_simulate("organic", 5, 2, 4, nullptr, b.str().c_str()) == MW_OK);
  CHECK(slurp(a.file("ohlcv.csv")) == slurp(b.file("ohlcv.csv")));
  CHECK(slurp(a.file("trades.csv")) == slurp(b.file("trades.csv")));

  TempDir c("capi");
  CHECK(mw_simulate("ponzi", 5, 2, 4, nullptr, c.str().c_str()) == MW_ERR_INVALID_ARGUMENT);
  CHECK(std::string(mw_last_error()).find("unknown scenario kind") != std::string::npos);
  CHECK(mw_simulate("organic", 5, 0, 4, nullptr, c.str().c_str()) == MW_ERR_INVALID_ARGUMENT);
}

TEST_CASE("end to end: simulate, load, detect, returns, report") {
  TempDir dir("capi");
  ConfigHandle cfg;
  REQUIRE(mw_simulate("wash", 3, 3, 18, cfg.ptr, dir.file("data").c_str()) == MW_OK);

  mw_dataset* ds = nullptr;
  char* load_report = nullptr;
  REQUIRE(mw_dataset_load_dir(dir.file("data").c_str(), &ds, &load_report) == MW_OK);
  REQUIRE(ds != nullptr);
  REQUIRE(load_report != nullptr);
  CHECK(std::string(load_report).find("\"rows_rejected\":0") != std::string::npos);
  mw_free_string(load_report);

  int64_t tokens = 0;
  REQUIRE(mw_dataset_token_count(ds, &tokens) == MW_OK);
  CHECK(tokens == 3);

  mw_events* events = nullptr;
  char* summary = nullptr;
  REQUIRE(mw_detect(ds, cfg.ptr, "all", 2, &events, &summary) == MW_OK);
  REQUIRE(summary != nullptr);
  CHECK(std::string(summary).find("\"wash_screened_days\":9") != std::string::npos);
  CHECK(std::string(summary).find("\"warnings\":[]") != std::string::npos);
  mw_free_string(summary);

  int64_t n_events = 0;
  REQUIRE(mw_events_count(events, &n_events) == MW_OK);
  CHECK(n_events == 3 * 7);  // per token: 3 days x (zero-risk + circular) + persistent

  // jsonl round trip through the ABI is byte-stable
  REQUIRE(mw_events_write_jsonl(events, dir.file("e1.jsonl").c_str()) == MW_OK);
  mw_events* events2 = nullptr;
  REQUIRE(mw_events_load_jsonl(dir.file("e1.jsonl").c_str(), &events2) == MW_OK);
  REQUIRE(mw_events_write_jsonl(events2, dir.file("e2.jsonl").c_str()) == MW_OK);
  const std::string jsonl = slurp(dir.file("e1.jsonl"));
  CHECK(jsonl == slurp(dir.file("e2.jsonl")));
  CHECK(std::count(jsonl.begin(), jsonl.end(), '\n') == n_events);

  mw_returns* returns = nullptr;
  REQUIRE(mw_compute_returns(ds, cfg.ptr, 1700006400, &returns) == MW_OK);
  int64_t n_returns = 0;
  REQUIRE(mw_returns_count(returns, &n_returns) == MW_OK);
  CHECK(n_returns == 3);

  REQUIRE(mw_returns_write_csv(returns, dir.file("returns.csv").c_str()) == MW_OK);
  mw_returns* returns2 = nullptr;
  REQUIRE(mw_returns_load_csv(dir.file("returns.csv").c_str(), &returns2) == MW_OK);
  REQUIRE(mw_returns_count(returns2, &n_returns) == MW_OK);
  CHECK(n_returns == 3);

  REQUIRE(mw_report(events, returns, dir.file("report").c_str()) == MW_OK);
  CHECK(slurp(dir.file("report/summary.csv")).rfind("section,metric,value\n", 0) == 0);
  CHECK(slurp(dir.file("report/report.json")).find("\"prevalence\"") != std::string::npos);
  const std::string report_events = slurp(dir.file("report/events.jsonl"));
  CHECK(std::count(report_events.begin(), report_events.end(), '\n') == n_events);

  mw_returns_destroy(returns2);
  mw_returns_destroy(returns);
  mw_events_destroy(events2);
  mw_events_destroy(events);
  mw_dataset_destroy(ds);

  CHECK(mw_events_load_jsonl(dir.file("absent.jsonl").c_str(), &events2) == MW_ERR_IO);
}

TEST_CASE("keyword model construction through the ABI") {
  TempDir dir("capi");
  spit(dir.file("corpus.txt"), "moon moon doge\nmoon cat\ndog food\n");
  int32_t cutoff = 0;
  REQUIRE(mw_build_keyword_model(dir.file("corpus.txt").c_str(), nullptr, 2,
                                 dir.file("model.csv").c_str(), &cutoff) == MW_OK);
  CHECK(cutoff == 2);
  CHECK(slurp(dir.file("model.csv")).rfind("rank,word,score\n", 0) == 0);

  CHECK(mw_build_keyword_model(dir.file("corpus.txt").c_str(), nullptr, -1,
                               dir.file("model.csv").c_str(), nullptr) ==
        MW_ERR_INVALID_ARGUMENT);
  spit(dir.file("empty.txt"), "");
  CHECK(mw_build_keyword_model(dir.file("empty.txt").c_str(), nullptr, 0,
                               dir.file("model.csv").c_str(), nullptr) ==
        MW_ERR_INVALID_ARGUMENT);
}
