#include "model.hpp"

#include <cmath>
#include <limits>

#include "error.hpp"

namespace mw {

bool is_growth_kind(EventKind k) {
  switch (k) {
    case EventKind::WashZeroRisk:
    case EventKind::WashCircular:
    case EventKind::WashPersistent:
    case EventKind::Lpi:
    case EventKind::AnomalyTopHolders:
    case EventKind::AnomalyBundle:
    case EventKind::AnomalyFresh:
    case EventKind::AnomalyAirdrop:
    case EventKind::AnomalyHoneypot:
      return true;
    case EventKind::PumpAndDump:
    case EventKind::RugPull:
      return false;
  }
  return false;
}

bool is_extraction_kind(EventKind k) {
  return k == EventKind::PumpAndDump || k == EventKind::RugPull;
}

const char* to_string(Chain c) {
  switch (c) {
    case Chain::Ethereum: return "ethereum";
    case Chain::Bsc: return "bsc";
    case Chain::Solana: return "solana";
    case Chain::Base: return "base";
  }
  return "?";
}

const char* to_string(Side s) { return s == Side::Buy ? "buy" : "sell"; }

const char* to_string(EventKind k) {
  switch (k) {
    case EventKind::WashZeroRisk: return "WashZeroRisk";
    case EventKind::WashCircular: return "WashCircular";
    case EventKind::WashPersistent: return "WashPersistent";
    case EventKind::Lpi: return "Lpi";
    case EventKind::PumpAndDump: return "PumpAndDump";
    case EventKind::RugPull: return "RugPull";
    case EventKind::AnomalyTopHolders: return "AnomalyTopHolders";
    case EventKind::AnomalyBundle: return "AnomalyBundle";
    case EventKind::AnomalyFresh: return "AnomalyFresh";
    case EventKind::AnomalyAirdrop: return "AnomalyAirdrop";
    case EventKind::AnomalyHoneypot: return "AnomalyHoneypot";
  }
  return "?";
}

const char* to_string(ReturnCategory c) {
  switch (c) {
    case ReturnCategory::Missing: return "Missing";
    case ReturnCategory::Negative: return "Negative";
    case ReturnCategory::Inactive: return "Inactive";
    case ReturnCategory::StableActive: return "StableActive";
    case ReturnCategory::Positive: return "Positive";
    case ReturnCategory::HighReturn: return "HighReturn";
  }
  return "?";
}

std::optional<Chain> parse_chain(std::string_view s) {
  if (s == "ethereum") return Chain::Ethereum;
  if (s == "bsc") return Chain::Bsc;
  if (s == "solana") return Chain::Solana;
  if (s == "base") return Chain::Base;
  return std::nullopt;
}

std::optional<Side> parse_side(std::string_view s) {
  if (s == "buy") return Side::Buy;
  if (s == "sell") return Side::Sell;
  return std::nullopt;
}

std::optional<EventKind> parse_event_kind(std::string_view s) {
  static constexpr EventKind kAll[] = {
      EventKind::WashZeroRisk,   EventKind::WashCircular, EventKind::WashPersistent,
      EventKind::Lpi,            EventKind::PumpAndDump,  EventKind::RugPull,
      EventKind::AnomalyTopHolders, EventKind::AnomalyBundle, EventKind::AnomalyFresh,
      EventKind::AnomalyAirdrop, EventKind::AnomalyHoneypot};
  for (EventKind k : kAll)
    if (s == to_string(k)) return k;
  return std::nullopt;
}

std::optional<ReturnCategory> parse_return_category(std::string_view s) {
  static constexpr ReturnCategory kAll[] = {
      ReturnCategory::Missing,      ReturnCategory::Negative, ReturnCategory::Inactive,
      ReturnCategory::StableActive, ReturnCategory::Positive, ReturnCategory::HighReturn};
  for (ReturnCategory c : kAll)
    if (s == to_string(c)) return c;
  return std::nullopt;
}

std::optional<double> pct_change(double prev, double cur) {
  if (std::isnan(prev) || std::isnan(cur)) return std::nullopt;
  if (prev == 0.0) {
    if (cur == 0.0) return 0.0;
    if (cur > 0.0) return std::numeric_limits<double>::infinity();
    return std::nullopt;  // negative from zero: undefined for this data
  }
  return (cur - prev) / prev * 100.0;
}

double market_cap(double price_usd, double circulating_supply) {
  return price_usd * circulating_supply;
}

std::vector<DailyAggregate> daily_aggregate(const std::vector<OhlcvBar>& bars) {
  std::vector<DailyAggregate> out;
  if (bars.empty()) return out;
  for (std::size_t i = 1; i < bars.size(); ++i)
    if (bars[i].ts <= bars[i - 1].ts)
      raise(ErrorCode::InvalidArgument, "daily_aggregate: bars must be strictly increasing in ts");

  std::int64_t first_day = day_of(bars.front().ts);
  std::int64_t last_day = day_of(bars.back().ts);
  std::size_t i = 0;
  double prev_close = bars.front().open;
  for (std::int64_t day = first_day; day <= last_day; ++day) {
    DailyAggregate agg;
    agg.day = day;
    if (i < bars.size() && day_of(bars[i].ts) == day) {
      agg.open = bars[i].open;
      double vol = 0;
      int n = 0;
      double close = bars[i].close;
      while (i < bars.size() && day_of(bars[i].ts) == day) {
        vol += bars[i].volume_usd;
        close = bars[i].close;
        ++n;
        ++i;
      }
      agg.close = close;
      agg.volume_usd = vol;
      agg.bar_count = n;
      prev_close = close;
    } else {
      // Gap day: nothing traded, price carries over.
      agg.open = prev_close;
      agg.close = prev_close;
      agg.volume_usd = 0;
      agg.bar_count = 0;
    }
    out.push_back(agg);
  }
  return out;
}

}  // namespace mw
