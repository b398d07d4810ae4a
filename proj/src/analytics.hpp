#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "config.hpp"
#include "dataset.hpp"
#include "extraction.hpp"
#include "model.hpp"

namespace mw {

// Close-to-close window returns for every token in the dataset, in token_id
// order.  p_start = close of the latest bar at or before t0; p_end = close of
// the latest bar in (t0, t0 + returns.window_days days]; window_volume_usd
// sums bar volume over that same interval.
//
// Category: Missing when either price is absent or p_start == 0; otherwise
// Negative (< 0), Inactive (== 0 with zero window volume), StableActive
// (== 0 with volume), HighReturn (> returns.high_return_pct), Positive (the
// rest).
std::vector<ReturnRecord> compute_returns(const Dataset& data, std::int64_t t0,
                                          const Config& cfg);

// returns.csv: token_id,chain,p_start,p_end,return_pct,category,window_volume_usd
// Absent prices / undefined returns serialize as empty fields.
void write_returns_csv(const std::vector<ReturnRecord>& records, const std::string& path);
std::vector<ReturnRecord> load_returns_csv(const std::string& path);

struct ChainStats {
  std::int64_t listed = 0;       // tokens in the universe on this chain
  std::int64_t with_price = 0;   // of those, category != Missing
  std::int64_t high_return = 0;
};

// Token-level manipulation prevalence over the high-return subset, plus the
// growth->extraction linkage over all tokens.
struct PrevalenceReport {
  std::int64_t universe = 0;
  std::int64_t high_return = 0;

  // High-return tokens with at least one event of each kind (every kind is
  // present in the map, zero counts included).
  std::map<EventKind, std::int64_t> kind_tokens;

  // Grouped the way the headline statistic combines them.
  std::int64_t wash_tokens = 0;     // any wash variant
  std::int64_t lpi_tokens = 0;
  std::int64_t anomaly_tokens = 0;  // any distribution anomaly
  std::int64_t union_tokens = 0;    // any growth-phase kind at all
  double union_pct = 0;             // 100 * union / high_return; NaN if no high-return tokens

  LinkageReport linkage;            // over all tokens with extraction events

  std::map<Chain, ChainStats> per_chain;  // all four chains always present
};

PrevalenceReport prevalence(const std::vector<ReturnRecord>& returns,
                            const std::vector<DetectionEvent>& events);

// Writes report.json (nested stats), events.jsonl (canonical order), and
// summary.csv (section,metric,value rows; counts as integers, rates as
// %.4f) into out_dir, creating it if needed.  Byte-stable for identical
// inputs regardless of input event order.
void render_report(const PrevalenceReport& prev, const std::vector<ReturnRecord>& returns,
                   const std::vector<DetectionEvent>& events, const std::string& out_dir);

}  // namespace mw
