#include "extraction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "error.hpp"

namespace mw {

std::vector<double> rsi(const std::vector<double>& closes, int period) {
  if (period < 1) raise(ErrorCode::InvalidArgument, "rsi period must be >= 1");
  const std::size_t n = closes.size();
  std::vector<double> out(n, std::numeric_limits<double>::quiet_NaN());
  if (n <= static_cast<std::size_t>(period)) return out;

  auto rsi_value = [](double avg_gain, double avg_loss) {
    if (avg_loss == 0) return 100.0;
    if (avg_gain == 0) return 0.0;
    return 100.0 - 100.0 / (1.0 + avg_gain / avg_loss);
  };

  double avg_gain = 0, avg_loss = 0;
  for (int i = 1; i <= period; ++i) {
    double d = closes[i] - closes[i - 1];
    if (d > 0)
      avg_gain += d;
    else
      avg_loss -= d;
  }
  avg_gain /= period;
  avg_loss /= period;
  out[period] = rsi_value(avg_gain, avg_loss);

  for (std::size_t i = period + 1; i < n; ++i) {
    double d = closes[i] - closes[i - 1];
    double gain = d > 0 ? d : 0;
    double loss = d < 0 ? -d : 0;
    avg_gain = (avg_gain * (period - 1) + gain) / period;
    avg_loss = (avg_loss * (period - 1) + loss) / period;
    out[i] = rsi_value(avg_gain, avg_loss);
  }
  return out;
}

namespace {

// Indices of local maxima of `closes`.  A plateau counts once, at its first
// bar; a neighbor side that exists must be strictly lower.
std::vector<std::size_t> local_maxima(const std::vector<double>& closes) {
  std::vector<std::size_t> out;
  const std::size_t n = closes.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && closes[j + 1] == closes[i]) ++j;  // plateau [i, j]
    bool left_ok = (i == 0) || (closes[i - 1] < closes[i]);
    bool right_ok = (j == n - 1) || (closes[j + 1] < closes[i]);
    if (left_ok && right_ok && !(i == 0 && j == n - 1)) out.push_back(i);
    i = j + 1;
  }
  return out;
}

// Sum of bar volumes with ts in [from_ts, to_ts], bars sorted by ts.
double volume_between(const std::vector<OhlcvBar>& bars, std::int64_t from_ts, std::int64_t to_ts) {
  auto lo = std::lower_bound(bars.begin(), bars.end(), from_ts,
                             [](const OhlcvBar& b, std::int64_t ts) { return b.ts < ts; });
  double sum = 0;
  for (auto it = lo; it != bars.end() && it->ts <= to_ts; ++it) sum += it->volume_usd;
  return sum;
}

}  // namespace

PumpDumpDetection detect_pump_dump(const std::string& token_id,
                                   const std::vector<OhlcvBar>& bars, const Config& cfg) {
  PumpDumpDetection out;
  const std::size_t n = bars.size();
  if (n < 3) return out;

  std::vector<double> closes(n);
  for (std::size_t i = 0; i < n; ++i) closes[i] = bars[i].close;
  std::vector<double> r = rsi(closes, static_cast<int>(cfg.pnd_rsi_period));

  const std::int64_t pump_win = static_cast<std::int64_t>(cfg.pnd_max_pump_hours) * kSecondsPerHour;
  const std::int64_t dump_win = static_cast<std::int64_t>(cfg.pnd_dump_search_hours) * kSecondsPerHour;
  const std::int64_t post_win = static_cast<std::int64_t>(cfg.pnd_post_dump_hours) * kSecondsPerHour;

  for (std::size_t p : local_maxima(closes)) {
    if (std::isnan(r[p]) || !(r[p] > cfg.pnd_rsi_overbought)) continue;
    ++out.peaks_considered;
    const double peak_close = closes[p];
    const std::int64_t peak_ts = bars[p].ts;

    // pump start: lowest close in the window before the peak; scanning
    // backwards with a strict < keeps the latest bar on ties
    std::size_t s = p;
    bool found = false;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = p; j-- > 0;) {
      if (bars[j].ts < peak_ts - pump_win) break;
      found = true;
      if (closes[j] < best) {
        best = closes[j];
        s = j;
      }
    }
    if (!found) {
      ++out.peaks_rejected;
      continue;
    }

    auto rise = pct_change(closes[s], peak_close);
    if (!rise || !(*rise > cfg.pnd_min_pump_pct)) {
      ++out.peaks_rejected;
      continue;
    }

    const std::int64_t start_ts = bars[s].ts;
    const double pump_volume = volume_between(bars, start_ts, peak_ts);
    const std::int64_t span = peak_ts - start_ts;  // window length in seconds
    const double prior_volume = volume_between(bars, start_ts - span - kSecondsPerHour,
                                               start_ts - kSecondsPerHour);
    if (!(pump_volume > cfg.pnd_min_volume_surge_mult * prior_volume)) {
      ++out.peaks_rejected;
      continue;
    }

    // dump: first close beyond the drop threshold within the search window
    std::size_t q = 0;
    bool dumped = false;
    for (std::size_t j = p + 1; j < n && bars[j].ts <= peak_ts + dump_win; ++j) {
      double drop = (peak_close - closes[j]) / peak_close * 100.0;
      if (drop > cfg.pnd_min_dump_pct) {
        q = j;
        dumped = true;
        break;
      }
    }
    if (!dumped) {
      ++out.peaks_rejected;
      continue;
    }

    const std::int64_t trough_ts = bars[q].ts;
    const double pump_hours = static_cast<double>(span) / kSecondsPerHour + 1;
    const double pump_mean = pump_volume / pump_hours;
    const double post_volume =
        volume_between(bars, trough_ts + kSecondsPerHour, trough_ts + post_win);
    const double post_mean = post_volume / (static_cast<double>(post_win) / kSecondsPerHour);
    if (!(post_mean < cfg.pnd_max_post_dump_volume_ratio * pump_mean)) {
      ++out.peaks_rejected;
      continue;
    }

    DetectionEvent ev;
    ev.token_id = token_id;
    ev.kind = EventKind::PumpAndDump;
    ev.window_start = start_ts;
    ev.window_end = trough_ts;
    ev.metrics["pump_pct"] = *rise;
    ev.metrics["dump_pct"] = (peak_close - closes[q]) / peak_close * 100.0;
    auto surge = pct_change(prior_volume, pump_volume);
    ev.metrics["pump_volume_surge_pct"] =
        surge ? *surge : std::numeric_limits<double>::quiet_NaN();
    ev.metrics["peak_ts"] = static_cast<double>(peak_ts);
    out.events.push_back(std::move(ev));
  }

  // overlapping windows: the earliest peak keeps the event
  std::sort(out.events.begin(), out.events.end(),
            [](const DetectionEvent& a, const DetectionEvent& b) {
              double pa = a.metrics.at("peak_ts"), pb = b.metrics.at("peak_ts");
              if (pa != pb) return pa < pb;
              return a.window_start < b.window_start;
            });
  std::vector<DetectionEvent> merged;
  for (auto& ev : out.events) {
    bool overlaps = false;
    for (const auto& kept : merged)
      if (ev.window_start <= kept.window_end && kept.window_start <= ev.window_end) {
        overlaps = true;
        break;
      }
    if (overlaps) {
      ++out.events_merged;
      continue;
    }
    merged.push_back(std::move(ev));
  }
  std::sort(merged.begin(), merged.end(), [](const DetectionEvent& a, const DetectionEvent& b) {
    return a.window_start < b.window_start;
  });
  out.events = std::move(merged);
  return out;
}

RugPullDetection detect_rug_pull(const std::string& token_id,
                                 const std::vector<DailyAggregate>& daily, const Config& cfg) {
  RugPullDetection out;
  const std::size_t n = daily.size();
  const int baseline_days = static_cast<int>(cfg.rug_baseline_days);
  const int post_days = static_cast<int>(cfg.rug_post_days);
  for (std::size_t i = 1; i < n; ++i) {
    auto drop = pct_change(daily[i - 1].close, daily[i].close);
    if (!drop || !(*drop < -cfg.rug_min_drop_pct)) continue;

    double base_sum = 0;
    int base_n = 0;
    for (std::size_t j = i > static_cast<std::size_t>(baseline_days) ? i - baseline_days : 0;
         j < i; ++j) {
      base_sum += daily[j].volume_usd;
      ++base_n;
    }
    if (base_n == 0 || !(base_sum > 0)) continue;  // no live baseline, not a rug
    double base_mean = base_sum / base_n;

    double post_sum = 0;
    int post_n = 0;
    for (std::size_t j = i + 1; j < n && j <= i + static_cast<std::size_t>(post_days); ++j) {
      post_sum += daily[j].volume_usd;
      ++post_n;
    }
    if (post_n == 0) {
      ++out.provisional;  // crash on the last observed day; volume collapse unverifiable
      continue;
    }
    double post_mean = post_sum / post_n;
    if (!(post_mean < cfg.rug_max_volume_ratio * base_mean)) continue;

    DetectionEvent ev;
    ev.token_id = token_id;
    ev.kind = EventKind::RugPull;
    ev.window_start = day_start(daily[i].day);
    ev.window_end = day_end(daily[i].day + post_days);
    ev.metrics["price_drop_pct"] = *drop;
    ev.metrics["volume_collapse_ratio"] = post_mean / base_mean;
    out.events.push_back(std::move(ev));
  }
  if (out.events.size() > 1)
    out.warnings.push_back(token_id + ": " + std::to_string(out.events.size()) +
                           " confirmed rug pulls on one token; inspect the feed");
  return out;
}

LinkageReport linkage(const std::vector<DetectionEvent>& growth_events,
                      const std::vector<DetectionEvent>& extraction_events) {
  LinkageReport out;
  std::map<std::string, std::int64_t> earliest_extraction;
  for (const auto& ev : extraction_events) {
    if (!is_extraction_kind(ev.kind)) continue;
    auto it = earliest_extraction.find(ev.token_id);
    if (it == earliest_extraction.end() || ev.window_start < it->second)
      earliest_extraction[ev.token_id] = ev.window_start;
  }
  out.extraction_tokens = static_cast<int>(earliest_extraction.size());
  for (const auto& [token, start] : earliest_extraction) {
    for (const auto& ev : growth_events) {
      if (ev.token_id != token || !is_growth_kind(ev.kind)) continue;
      if (ev.window_end < start) {
        ++out.linked_tokens;
        break;
      }
    }
  }
  out.linked_pct = out.extraction_tokens == 0
                       ? std::numeric_limits<double>::quiet_NaN()
                       : 100.0 * out.linked_tokens / out.extraction_tokens;
  return out;
}

}  // namespace mw
