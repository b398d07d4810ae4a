#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "config.hpp"
#include "model.hpp"

namespace mw {

// A day that passed the wash-trading screen: volume surged versus the
// previous day while price barely moved.
struct ScreenedDay {
  std::int64_t day = 0;
  double volume_surge_pct = 0;   // may be +inf after a zero-volume day
  double price_change_pct = 0;
};

// surge > wash.volume_surge_pct and |price change| < wash.max_price_change_pct,
// both versus the previous aggregate day.  The first day has no baseline and
// never screens.
std::vector<ScreenedDay> screen_wash_days(const std::vector<DailyAggregate>& daily,
                                          const Config& cfg);

struct WashDetection {
  std::vector<DetectionEvent> events;
  int screened_days = 0;
  int unconfirmed_days = 0;  // screened but no maker-level pattern confirmed
};

// Wash-trading detection.  Screened days are confirmed against trade-level
// behavior; each confirmation type emits its own event kind:
//   WashZeroRisk   day has makers whose buy and sell totals net out within
//                  wash.zero_risk_tolerance (|b - s| / max(b, s))
//   WashCircular   both-sided makers carry >= wash.circular_ratio of the
//                  day's trade volume (all trade amounts count, both sides)
//   WashPersistent >= 2 screened days share at least one maker active on
//                  every one of them; window spans first..last screened day
// Metrics: WashZeroRisk {price_change_pct, volume_surge_pct, zero_risk_makers},
// WashCircular {circular_ratio, price_change_pct, unique_makers, volume_surge_pct},
// WashPersistent {persistent_makers, screened_days}.
WashDetection detect_wash_trading(const std::string& token_id,
                                  const std::vector<DailyAggregate>& daily,
                                  const std::vector<Trade>& trades, const Config& cfg);

struct LpiDetection {
  std::vector<DetectionEvent> events;
  int phase1_days = 0;
  int unconfirmed_days = 0;
};

// Liquidity-pool-inflation detection, two phases per day:
//   phase 1 (price/volume): close change > lpi.min_price_change_pct AND
//     (volume change <= lpi.max_volume_growth_pct OR day volume <
//      lpi.low_volume_usd) — a price that doubles on no real flow
//   phase 2 (trades): buy ratio >= lpi.min_buy_ratio AND unique makers <=
//     lpi.max_unique_makers
// Metrics: {buy_ratio, price_change_pct, unique_makers, volume_usd} where
// volume_usd is the OHLCV day volume used by phase 1.
LpiDetection detect_lpi(const std::string& token_id, const std::vector<DailyAggregate>& daily,
                        const std::vector<Trade>& trades, const Config& cfg);

// Holder/distribution anomalies, one event per triggered rule per snapshot:
// top10/bundle/fresh/airdrop share strictly above anomaly.share_threshold_pct,
// honeypot flag set.  Window is the snapshot instant.
std::vector<DetectionEvent> detect_holder_anomalies(const std::string& token_id,
                                                    const std::vector<HolderSnapshot>& snaps,
                                                    const Config& cfg);

}  // namespace mw
