#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "config.hpp"
#include "dataset.hpp"
#include "model.hpp"

namespace mw {

struct DetectSelection {
  bool wash = false;
  bool lpi = false;
  bool anomaly = false;
  bool pump_dump = false;
  bool rug_pull = false;

  static DetectSelection all();
};

// "all" or a comma list of: wash, lpi, pnd, rug, anomaly.
// Raises Error(InvalidArgument) on anything else.
DetectSelection parse_detect_kinds(std::string_view spec);

struct DetectionRun {
  // Canonically ordered: (token_id, window_start, kind, window_end).
  std::vector<DetectionEvent> events;
  // Detector warnings (e.g. repeated rug pulls on one token), token order.
  std::vector<std::string> warnings;
  // Aggregated detector counters (screened days, rejected peaks, ...),
  // summed over tokens; key set is stable for a given selection.
  std::map<std::string, std::int64_t> stats;
};

// Runs the selected detectors over every token.  Tokens are independent, so
// the work fans out over `threads` (0 = hardware concurrency); output is
// byte-for-byte identical regardless of thread count.
DetectionRun run_detectors(const Dataset& data, const Config& cfg,
                           const DetectSelection& sel, int threads = 0);

}  // namespace mw
