#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "config.hpp"
#include "dataset.hpp"
#include "model.hpp"

namespace mw {

enum class ScenarioKind { Organic, Wash, Lpi, PumpDump, RugPull };

const char* to_string(ScenarioKind k);
std::optional<ScenarioKind> parse_scenario_kind(std::string_view s);

struct ScenarioSpec {
  ScenarioKind kind = ScenarioKind::Organic;
  std::uint64_t seed = 0;
  int token_count = 1;
  int duration_days = 60;
  std::int64_t t0 = 1700006400;  // 2023-11-15T00:00Z; must be day aligned
};

struct ScenarioResult {
  Dataset data;                  // tokens, dense hourly ohlcv, trades, holders
  std::vector<LabelRow> labels;  // ground truth for every scripted event
};

// Deterministic synthetic market data.  Every token runs a per-token RNG
// stream derived from (seed, index), so output is byte-identical for a
// fixed spec and independent of token count changes elsewhere.
//
// All prices move through a constant-product pool; bars are dense (every
// hour gets a bar, zero-volume hours carry the spot price flat).  Organic
// flow is bounded on purpose: every day trades at least twice, day volume
// never exceeds sim.organic_max_daily_volume_mult x the previous day, and
// no trade may push the spot price beyond sim.organic_max_daily_move_pct
// from the previous close (the trade is flipped, then skipped).  Those three
// bounds keep clean tokens clear of every detector screen.
//
// Scripted kinds overlay the organic engine:
//   wash      sim.wash_script_days days of balanced buy/sell pairs by a ring
//             of 1-3 actors lifting day volume to sim.wash_volume_mult x the
//             prior day while price only collects the fee residue (< 1%)
//   lpi       one whale buy of exactly cost_to_multiply_price(pool, m),
//             m in [2.8, 12], on a frictionless shallow pool, organic flow
//             silenced that day (day volume < $1000, one maker, buys only)
//   pump_dump a 9-hour ramp of sized buys to ~sim.pump_target_mult x, then a
//             two-step dump to ~0.62x the peak; surrounding days run "thin"
//             (one ~$1.5 trade/day) so the prior-window volume comparison
//             and the post-trough quiet window hold with wide margin
//   rug_pull  the deployer sells sim.rug_dump_reserve_mult x the token
//             reserve ten days before the end (price -99.7%), afterwards the
//             token limps along at ~$0.4/day against a >= $250/day baseline
//
// Generation ends with a self-check that recomputes every scripted
// guarantee from the produced bars/trades and throws Error(Internal) if one
// fails, so an infeasible parameter combination cannot silently emit data
// that contradicts its own labels.
ScenarioResult generate_scenario(const ScenarioSpec& spec, const Config& cfg);

// write_dataset(dir) plus labels.csv.
void write_scenario_dir(const ScenarioResult& result, const std::string& dir);

}  // namespace mw
