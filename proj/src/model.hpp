#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace mw {

enum class Chain { Ethereum, Bsc, Solana, Base };

enum class Side { Buy, Sell };

enum class EventKind {
  WashZeroRisk,
  WashCircular,
  WashPersistent,
  Lpi,
  PumpAndDump,
  RugPull,
  AnomalyTopHolders,
  AnomalyBundle,
  AnomalyFresh,
  AnomalyAirdrop,
  AnomalyHoneypot,
};

// Growth-phase manipulation inflates apparent traction; extraction-phase
// manipulation takes the money out.  The split drives the linkage metric.
bool is_growth_kind(EventKind k);
bool is_extraction_kind(EventKind k);

enum class ReturnCategory { Missing, Negative, Inactive, StableActive, Positive, HighReturn };

const char* to_string(Chain c);
const char* to_string(Side s);
const char* to_string(EventKind k);
const char* to_string(ReturnCategory c);
std::optional<Chain> parse_chain(std::string_view s);
std::optional<Side> parse_side(std::string_view s);
std::optional<EventKind> parse_event_kind(std::string_view s);
std::optional<ReturnCategory> parse_return_category(std::string_view s);

struct TokenRecord {
  std::string token_id;
  Chain chain = Chain::Ethereum;
  std::string address;
  std::string name;
  std::string symbol;
  std::int64_t created_at = 0;          // unix seconds
  std::set<std::string> sources;        // discovery source tags, deduplicated
};

// One hourly candle.  Series are keyed by token_id elsewhere; the bar itself
// does not repeat the key.
struct OhlcvBar {
  std::int64_t ts = 0;  // bar open time, unix seconds, hour aligned
  double open = 0;
  double high = 0;
  double low = 0;
  double close = 0;
  double volume_usd = 0;
};

struct Trade {
  std::int64_t ts = 0;
  std::string maker_id;
  Side side = Side::Buy;
  double amount_usd = 0;  // strictly positive
};

struct HolderSnapshot {
  std::int64_t ts = 0;
  double top10_share = 0;         // percent, 0..100
  double bundle_buy_share = 0;    // percent of supply bought in bundled txs
  double fresh_address_share = 0; // percent held by addresses younger than 24h at buy time
  double airdrop_share = 0;       // percent of supply distributed via airdrop
  bool honeypot = false;          // sell path blocked or taxed away
};

struct TokenEconomics {
  std::int64_t ts = 0;
  double price_usd = 0;           // NaN when unknown
  double circulating_supply = 0;  // NaN when unknown
  double market_cap_usd = 0;      // NaN when unknown
  double liquidity_usd = 0;       // NaN when unknown
};

struct DailyAggregate {
  std::int64_t day = 0;  // UTC day index (unix seconds / 86400)
  double open = 0;
  double close = 0;
  double volume_usd = 0;
  int bar_count = 0;     // 0 for gap-filled days
};

struct DetectionEvent {
  std::string token_id;
  EventKind kind = EventKind::WashZeroRisk;
  std::int64_t window_start = 0;  // unix seconds, inclusive
  std::int64_t window_end = 0;    // unix seconds, inclusive; >= window_start
  std::map<std::string, double> metrics;
  std::set<std::string> actors;   // maker ids implicated, may be empty
};

struct ReturnRecord {
  std::string token_id;
  Chain chain = Chain::Ethereum;  // carried so reports can break out by chain
  double p_start = 0;
  double p_end = 0;
  double return_pct = 0;          // NaN when category == Missing
  ReturnCategory category = ReturnCategory::Missing;
  double window_volume_usd = 0;   // total bar volume inside the window
};

constexpr std::int64_t kSecondsPerHour = 3600;
constexpr std::int64_t kSecondsPerDay = 86400;

// UTC day index of a timestamp.  Timestamps are never negative in this data.
inline std::int64_t day_of(std::int64_t ts) { return ts / kSecondsPerDay; }
inline std::int64_t day_start(std::int64_t day) { return day * kSecondsPerDay; }
inline std::int64_t day_end(std::int64_t day) { return day * kSecondsPerDay + kSecondsPerDay - 1; }

// Percent change from prev to cur.  nullopt when prev == 0 and cur == 0 is
// not representable either; the conventions are:
//   prev == 0, cur == 0  -> 0
//   prev == 0, cur  > 0  -> +infinity (caller compares; serializers clamp)
//   otherwise            -> (cur - prev) / prev * 100
std::optional<double> pct_change(double prev, double cur);

// price * circulating supply; NaN if either input is NaN.
double market_cap(double price_usd, double circulating_supply);

// Collapse an hourly series (sorted by ts, strictly increasing) into daily
// aggregates.  Days between the first and last bar with no bars at all are
// emitted with volume 0, bar_count 0, and open == close == previous close,
// so day-over-day comparisons stay well defined across gaps.
std::vector<DailyAggregate> daily_aggregate(const std::vector<OhlcvBar>& bars);

}  // namespace mw
