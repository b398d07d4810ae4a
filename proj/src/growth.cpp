#include "growth.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace mw {

namespace {

// Trades are sorted by ts; return [first, last) for the UTC day.
std::pair<std::size_t, std::size_t> day_trade_range(const std::vector<Trade>& trades,
                                                    std::int64_t day) {
  auto lo = std::lower_bound(trades.begin(), trades.end(), day_start(day),
                             [](const Trade& t, std::int64_t ts) { return t.ts < ts; });
  auto hi = std::lower_bound(lo, trades.end(), day_start(day + 1),
                             [](const Trade& t, std::int64_t ts) { return t.ts < ts; });
  return {static_cast<std::size_t>(lo - trades.begin()), static_cast<std::size_t>(hi - trades.begin())};
}

struct MakerFlow {
  double bought = 0;
  double sold = 0;
};

std::map<std::string, MakerFlow> maker_flows(const std::vector<Trade>& trades, std::size_t lo,
                                             std::size_t hi) {
  std::map<std::string, MakerFlow> flows;
  for (std::size_t i = lo; i < hi; ++i) {
    MakerFlow& f = flows[trades[i].maker_id];
    if (trades[i].side == Side::Buy)
      f.bought += trades[i].amount_usd;
    else
      f.sold += trades[i].amount_usd;
  }
  return flows;
}

}  // namespace

std::vector<ScreenedDay> screen_wash_days(const std::vector<DailyAggregate>& daily,
                                          const Config& cfg) {
  std::vector<ScreenedDay> out;
  for (std::size_t i = 1; i < daily.size(); ++i) {
    auto surge = pct_change(daily[i - 1].volume_usd, daily[i].volume_usd);
    auto price = pct_change(daily[i - 1].close, daily[i].close);
    if (!surge || !price) continue;
    if (*surge > cfg.wash_volume_surge_pct && std::fabs(*price) < cfg.wash_max_price_change_pct)
      out.push_back({daily[i].day, *surge, *price});
  }
  return out;
}

WashDetection detect_wash_trading(const std::string& token_id,
                                  const std::vector<DailyAggregate>& daily,
                                  const std::vector<Trade>& trades, const Config& cfg) {
  WashDetection out;
  std::vector<ScreenedDay> screened = screen_wash_days(daily, cfg);
  out.screened_days = static_cast<int>(screened.size());

  // maker -> number of screened days with at least one trade
  std::map<std::string, int> screened_presence;

  for (const ScreenedDay& sd : screened) {
    auto [lo, hi] = day_trade_range(trades, sd.day);
    auto flows = maker_flows(trades, lo, hi);

    std::set<std::string> zero_risk;
    std::set<std::string> both_sided;
    double day_volume = 0;
    double both_sided_volume = 0;
    for (const auto& [maker, f] : flows) {
      ++screened_presence[maker];
      double total = f.bought + f.sold;
      day_volume += total;
      double top = std::max(f.bought, f.sold);
      if (f.bought > 0 && f.sold > 0) {
        both_sided.insert(maker);
        both_sided_volume += total;
        if (std::fabs(f.bought - f.sold) / top <= cfg.wash_zero_risk_tolerance)
          zero_risk.insert(maker);
      }
    }

    bool confirmed = false;
    if (!zero_risk.empty()) {
      DetectionEvent ev;
      ev.token_id = token_id;
      ev.kind = EventKind::WashZeroRisk;
      ev.window_start = day_start(sd.day);
      ev.window_end = day_end(sd.day);
      ev.metrics["volume_surge_pct"] = sd.volume_surge_pct;
      ev.metrics["price_change_pct"] = sd.price_change_pct;
      ev.metrics["zero_risk_makers"] = static_cast<double>(zero_risk.size());
      ev.actors = zero_risk;
      out.events.push_back(std::move(ev));
      confirmed = true;
    }
    if (day_volume > 0 && both_sided_volume / day_volume >= cfg.wash_circular_ratio) {
      DetectionEvent ev;
      ev.token_id = token_id;
      ev.kind = EventKind::WashCircular;
      ev.window_start = day_start(sd.day);
      ev.window_end = day_end(sd.day);
      ev.metrics["volume_surge_pct"] = sd.volume_surge_pct;
      ev.metrics["price_change_pct"] = sd.price_change_pct;
      ev.metrics["circular_ratio"] = both_sided_volume / day_volume;
      ev.metrics["unique_makers"] = static_cast<double>(flows.size());
      ev.actors = both_sided;
      out.events.push_back(std::move(ev));
      confirmed = true;
    }
    if (!confirmed) ++out.unconfirmed_days;
  }

  if (screened.size() >= 2) {
    std::set<std::string> persistent;
    for (const auto& [maker, days] : screened_presence)
      if (days == static_cast<int>(screened.size())) persistent.insert(maker);
    if (!persistent.empty()) {
      DetectionEvent ev;
      ev.token_id = token_id;
      ev.kind = EventKind::WashPersistent;
      ev.window_start = day_start(screened.front().day);
      ev.window_end = day_end(screened.back().day);
      ev.metrics["screened_days"] = static_cast<double>(screened.size());
      ev.metrics["persistent_makers"] = static_cast<double>(persistent.size());
      ev.actors = std::move(persistent);
      out.events.push_back(std::move(ev));
    }
  }
  return out;
}

LpiDetection detect_lpi(const std::string& token_id, const std::vector<DailyAggregate>& daily,
                        const std::vector<Trade>& trades, const Config& cfg) {
  LpiDetection out;
  for (std::size_t i = 1; i < daily.size(); ++i) {
    auto price = pct_change(daily[i - 1].close, daily[i].close);
    if (!price || !(*price > cfg.lpi_min_price_change_pct)) continue;
    auto vol_growth = pct_change(daily[i - 1].volume_usd, daily[i].volume_usd);
    bool stagnant_volume = vol_growth && *vol_growth <= cfg.lpi_max_volume_growth_pct;
    bool low_volume = daily[i].volume_usd < cfg.lpi_low_volume_usd;
    if (!stagnant_volume && !low_volume) continue;
    ++out.phase1_days;

    auto [lo, hi] = day_trade_range(trades, daily[i].day);
    double buys = 0, total = 0;
    std::set<std::string> makers;
    for (std::size_t t = lo; t < hi; ++t) {
      total += trades[t].amount_usd;
      if (trades[t].side == Side::Buy) buys += trades[t].amount_usd;
      makers.insert(trades[t].maker_id);
    }
    if (total <= 0) {
      ++out.unconfirmed_days;
      continue;
    }
    double buy_ratio = buys / total;
    if (buy_ratio >= cfg.lpi_min_buy_ratio &&
        static_cast<double>(makers.size()) <= cfg.lpi_max_unique_makers) {
      DetectionEvent ev;
      ev.token_id = token_id;
      ev.kind = EventKind::Lpi;
      ev.window_start = day_start(daily[i].day);
      ev.window_end = day_end(daily[i].day);
      ev.metrics["price_change_pct"] = *price;
      ev.metrics["volume_usd"] = daily[i].volume_usd;
      ev.metrics["buy_ratio"] = buy_ratio;
      ev.metrics["unique_makers"] = static_cast<double>(makers.size());
      ev.actors = std::move(makers);
      out.events.push_back(std::move(ev));
    } else {
      ++out.unconfirmed_days;
    }
  }
  return out;
}

std::vector<DetectionEvent> detect_holder_anomalies(const std::string& token_id,
                                                    const std::vector<HolderSnapshot>& snaps,
                                                    const Config& cfg) {
  std::vector<DetectionEvent> out;
  const double thr = cfg.anomaly_share_threshold_pct;
  auto emit = [&](const HolderSnapshot& s, EventKind kind, const char* metric, double value) {
    DetectionEvent ev;
    ev.token_id = token_id;
    ev.kind = kind;
    ev.window_start = s.ts;
    ev.window_end = s.ts;
    ev.metrics[metric] = value;
    out.push_back(std::move(ev));
  };
  for (const HolderSnapshot& s : snaps) {
    if (s.top10_share > thr) emit(s, EventKind::AnomalyTopHolders, "top10_share", s.top10_share);
    if (s.bundle_buy_share > thr)
      emit(s, EventKind::AnomalyBundle, "bundle_buy_share", s.bundle_buy_share);
    if (s.fresh_address_share > thr)
      emit(s, EventKind::AnomalyFresh, "fresh_address_share", s.fresh_address_share);
    if (s.airdrop_share > thr) emit(s, EventKind::AnomalyAirdrop, "airdrop_share", s.airdrop_share);
    if (s.honeypot) emit(s, EventKind::AnomalyHoneypot, "honeypot", 1.0);
  }
  return out;
}

}  // namespace mw
