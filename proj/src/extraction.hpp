#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "config.hpp"
#include "model.hpp"

namespace mw {

// Wilder RSI.  Output is the same length as `closes`; entries before index
// `period` are NaN.  Seed averages are the simple means of the first
// `period` deltas; afterwards avg = (prev * (period - 1) + current) / period.
// Conventions: avg loss == 0 -> 100 (flat history included), else avg gain
// == 0 -> 0.  period must be >= 1 and < closes.size() to produce any value.
std::vector<double> rsi(const std::vector<double>& closes, int period = 14);

struct PumpDumpDetection {
  std::vector<DetectionEvent> events;
  int peaks_considered = 0;   // local maxima with RSI above the gate
  int peaks_rejected = 0;     // failed pump or dump confirmation
  int events_merged = 0;      // overlapping windows collapsed into the earlier peak
};

// Pump-and-dump over hourly bars:
//   peak: local maximum of close (plateaus count once, at their first bar)
//     with RSI > pnd.rsi_overbought
//   pump: start = argmin close over the pnd.max_pump_hours before the peak
//     (ties -> latest); rise > pnd.min_pump_pct and pump-window volume >
//     pnd.min_volume_surge_mult x the equal-length window before it
//   dump: first bar within pnd.dump_search_hours after the peak closing more
//     than pnd.min_dump_pct below the peak; confirmed when mean hourly
//     volume over the pnd.post_dump_hours after that trough stays below
//     pnd.max_post_dump_volume_ratio x the pump-phase mean
// Events overlapping an earlier event's window are dropped (earliest peak
// wins).  Window: [pump start ts, trough ts].  Metrics: {dump_pct, peak_ts,
// pump_pct, pump_volume_surge_pct}.
PumpDumpDetection detect_pump_dump(const std::string& token_id,
                                   const std::vector<OhlcvBar>& bars, const Config& cfg);

struct RugPullDetection {
  std::vector<DetectionEvent> events;
  int provisional = 0;                 // crash day present but no post-window data yet
  std::vector<std::string> warnings;   // e.g. more than one confirmed rug on one token
};

// Rug pull over daily aggregates: a day whose close drops more than
// rug.min_drop_pct versus the previous close, where mean daily volume over
// the following rug.post_days collapses below rug.max_volume_ratio x the
// mean over the preceding rug.baseline_days (which must be positive).
// Window: [crash day, crash day + rug.post_days].  Metrics:
// {price_drop_pct, volume_collapse_ratio}.
RugPullDetection detect_rug_pull(const std::string& token_id,
                                 const std::vector<DailyAggregate>& daily, const Config& cfg);

struct LinkageReport {
  int extraction_tokens = 0;  // tokens with at least one extraction event
  int linked_tokens = 0;      // of those, tokens with a growth event strictly before
  double linked_pct = 0;      // NaN when there are no extraction tokens
};

// A token is "linked" when some growth-phase event window ends strictly
// before its earliest extraction window starts — manufactured traction
// preceding the exit.
LinkageReport linkage(const std::vector<DetectionEvent>& growth_events,
                      const std::vector<DetectionEvent>& extraction_events);

}  // namespace mw
