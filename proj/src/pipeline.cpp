#include "pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "error.hpp"
#include "events_io.hpp"
#include "extraction.hpp"
#include "growth.hpp"

namespace mw {

DetectSelection DetectSelection::all() {
  DetectSelection s;
  s.wash = s.lpi = s.anomaly = s.pump_dump = s.rug_pull = true;
  return s;
}

DetectSelection parse_detect_kinds(std::string_view spec) {
  DetectSelection sel;
  std::size_t pos = 0;
  bool any = false;
  while (pos <= spec.size()) {
    std::size_t comma = spec.find(',', pos);
    std::string_view item = spec.substr(pos, comma == std::string_view::npos ? spec.size() - pos
                                                                             : comma - pos);
    pos = comma == std::string_view::npos ? spec.size() + 1 : comma + 1;
    if (item.empty()) continue;
    any = true;
    if (item == "all")
      sel = DetectSelection::all();
    else if (item == "wash")
      sel.wash = true;
    else if (item == "lpi")
      sel.lpi = true;
    else if (item == "pnd")
      sel.pump_dump = true;
    else if (item == "rug")
      sel.rug_pull = true;
    else if (item == "anomaly")
      sel.anomaly = true;
    else
      raise(ErrorCode::InvalidArgument,
            "unknown detector kind '" + std::string(item) +
                "' (expected wash, lpi, pnd, rug, anomaly, or all)");
  }
  if (!any) raise(ErrorCode::InvalidArgument, "no detector kinds given");
  return sel;
}

namespace {

struct TokenResult {
  std::vector<DetectionEvent> events;
  std::vector<std::string> warnings;
  std::int64_t wash_screened = 0, wash_unconfirmed = 0;
  std::int64_t lpi_phase1 = 0, lpi_unconfirmed = 0;
  std::int64_t pnd_considered = 0, pnd_rejected = 0, pnd_merged = 0;
  std::int64_t rug_provisional = 0;
};

TokenResult detect_one(const std::string& token_id, const Dataset& data, const Config& cfg,
                       const DetectSelection& sel) {
  TokenResult res;

  const std::vector<OhlcvBar>* bars = nullptr;
  if (auto it = data.ohlcv.find(token_id); it != data.ohlcv.end() && !it->second.empty())
    bars = &it->second;
  static const std::vector<Trade> kNoTrades;
  const std::vector<Trade>* trades = &kNoTrades;
  if (auto it = data.trades.find(token_id); it != data.trades.end()) trades = &it->second;

  std::vector<DailyAggregate> daily;
  if (bars && (sel.wash || sel.lpi || sel.rug_pull)) daily = daily_aggregate(*bars);

  if (sel.wash && bars) {
    WashDetection d = detect_wash_trading(token_id, daily, *trades, cfg);
    res.wash_screened = d.screened_days;
    res.wash_unconfirmed = d.unconfirmed_days;
    for (auto& ev : d.events) res.events.push_back(std::move(ev));
  }
  if (sel.lpi && bars) {
    LpiDetection d = detect_lpi(token_id, daily, *trades, cfg);
    res.lpi_phase1 = d.phase1_days;
    res.lpi_unconfirmed = d.unconfirmed_days;
    for (auto& ev : d.events) res.events.push_back(std::move(ev));
  }
  if (sel.anomaly) {
    if (auto it = data.holders.find(token_id); it != data.holders.end())
      for (auto& ev : detect_holder_anomalies(token_id, it->second, cfg))
        res.events.push_back(std::move(ev));
  }
  if (sel.pump_dump && bars) {
    PumpDumpDetection d = detect_pump_dump(token_id, *bars, cfg);
    res.pnd_considered = d.peaks_considered;
    res.pnd_rejected = d.peaks_rejected;
    res.pnd_merged = d.events_merged;
    for (auto& ev : d.events) res.events.push_back(std::move(ev));
  }
  if (sel.rug_pull && bars) {
    RugPullDetection d = detect_rug_pull(token_id, daily, cfg);
    res.rug_provisional = d.provisional;
    for (auto& w : d.warnings) res.warnings.push_back(std::move(w));
    for (auto& ev : d.events) res.events.push_back(std::move(ev));
  }
  return res;
}

}  // namespace

DetectionRun run_detectors(const Dataset& data, const Config& cfg,
                           const DetectSelection& sel, int threads) {
  if (threads < 0 || threads > 1024)
    raise(ErrorCode::InvalidArgument, "threads must be in [0, 1024]");
  if (threads == 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;

  std::vector<const std::string*> ids;
  ids.reserve(data.tokens.size());
  for (const auto& [id, tok] : data.tokens) ids.push_back(&id);

  std::vector<TokenResult> results(ids.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::atomic<bool> failed{false};

  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= ids.size() || failed.load()) return;
      try {
        results[i] = detect_one(*ids[i], data, cfg, sel);
      } catch (...) {
        if (!failed.exchange(true)) first_error = std::current_exception();
        return;
      }
    }
  };

  if (threads == 1 || ids.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    int n = std::min<int>(threads, static_cast<int>(ids.size()));
    pool.reserve(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failed.load()) std::rethrow_exception(first_error);

  DetectionRun run;
  for (auto& r : results) {
    for (auto& ev : r.events) run.events.push_back(std::move(ev));
    for (auto& w : r.warnings) run.warnings.push_back(std::move(w));
  }
  std::sort(run.events.begin(), run.events.end(), event_order);

  auto add = [&](const char* key, std::int64_t v) { run.stats[key] += v; };
  if (sel.wash) run.stats["wash_screened_days"] = 0, run.stats["wash_unconfirmed_days"] = 0;
  if (sel.lpi) run.stats["lpi_phase1_days"] = 0, run.stats["lpi_unconfirmed_days"] = 0;
  if (sel.pump_dump) {
    run.stats["pnd_peaks_considered"] = 0;
    run.stats["pnd_peaks_rejected"] = 0;
    run.stats["pnd_events_merged"] = 0;
  }
  if (sel.rug_pull) run.stats["rug_provisional_days"] = 0;
  for (const auto& r : results) {
    if (sel.wash) {
      add("wash_screened_days", r.wash_screened);
      add("wash_unconfirmed_days", r.wash_unconfirmed);
    }
    if (sel.lpi) {
      add("lpi_phase1_days", r.lpi_phase1);
      add("lpi_unconfirmed_days", r.lpi_unconfirmed);
    }
    if (sel.pump_dump) {
      add("pnd_peaks_considered", r.pnd_considered);
      add("pnd_peaks_rejected", r.pnd_rejected);
      add("pnd_events_merged", r.pnd_merged);
    }
    if (sel.rug_pull) add("rug_provisional_days", r.rug_provisional);
  }
  run.stats["events"] = static_cast<std::int64_t>(run.events.size());
  return run;
}

}  // namespace mw
