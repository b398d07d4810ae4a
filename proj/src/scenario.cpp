#include "scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iterator>
#include <map>
#include <set>

#include "amm.hpp"
#include "base58.hpp"
#include "error.hpp"
#include "extraction.hpp"
#include "rng.hpp"

namespace mw {

const char* to_string(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::Organic: return "organic";
    case ScenarioKind::Wash: return "wash";
    case ScenarioKind::Lpi: return "lpi";
    case ScenarioKind::PumpDump: return "pump_dump";
    case ScenarioKind::RugPull: return "rug_pull";
  }
  return "?";
}

std::optional<ScenarioKind> parse_scenario_kind(std::string_view s) {
  if (s == "organic") return ScenarioKind::Organic;
  if (s == "wash") return ScenarioKind::Wash;
  if (s == "lpi") return ScenarioKind::Lpi;
  if (s == "pump_dump") return ScenarioKind::PumpDump;
  if (s == "rug_pull") return ScenarioKind::RugPull;
  return std::nullopt;
}

namespace {

constexpr const char* kAdjectives[] = {"Moon", "Baby",  "Turbo", "Giga",  "Mega",  "Pepe",
                                       "Doge", "Floki", "Chad",  "Wojak", "Bonk",  "Snek",
                                       "Zoom", "Magic", "Hyper", "Based", "Alpha", "Sigma"};
constexpr const char* kNouns[] = {"Inu",  "Cat",     "Frog",  "Rocket", "Coin",
                                  "Dog",  "Whale",   "Ape",   "Hamster", "Corgi",
                                  "Lord", "Capybara", "Goose", "Wizard", "Knight"};

std::string make_address(CounterRng& rng, Chain chain) {
  if (chain == Chain::Solana) {
    std::vector<std::uint8_t> bytes(32);
    for (auto& b : bytes) b = static_cast<std::uint8_t>(rng.below(256));
    return base58_encode(bytes);
  }
  static const char* hex = "0123456789abcdef";
  std::string addr = "0x";
  for (int i = 0; i < 40; ++i) addr.push_back(hex[rng.below(16)]);
  return addr;
}

// Quote needed to multiply the spot price by r with one buy on a pool with
// fee f.  Solves (y + dq)(y + dq(1-f)) = r * y^2; reduces to y(sqrt(r) - 1)
// at f = 0.  Used by the generator to size pump-ramp buys exactly.
double quote_in_for_price_mult(const PoolState& pool, double r) {
  const double f = pool.fee_fraction;
  const double y = pool.reserve_quote;
  const double a = 2.0 - f;
  return y * (-a + std::sqrt(a * a + 4.0 * (1.0 - f) * (r - 1.0))) / (2.0 * (1.0 - f));
}

// Tokens to sell so the spot price falls to m (< 1) times its current value:
// (x + s(1-f))(x + s) = x^2 / m.
double tokens_in_for_price_mult(const PoolState& pool, double m) {
  const double f = pool.fee_fraction;
  const double x = pool.reserve_token;
  const double a = 2.0 - f;
  return x * (-a + std::sqrt(a * a - 4.0 * (1.0 - f) * (1.0 - 1.0 / m))) / (2.0 * (1.0 - f));
}

enum class DayMode { OrganicDay, ThinDay, WashDay, LpiDay, PumpDay, RugDay, RugAfterDay };

struct TokenScript {
  DayMode mode_for(int day) const {
    auto it = modes.find(day);
    return it == modes.end() ? DayMode::OrganicDay : it->second;
  }
  std::map<int, DayMode> modes;
  std::vector<int> wash_days;
  int lpi_day = -1;
  int pump_day = -1;
  int rug_day = -1;
  double lpi_mult = 0;
  double pump_mult = 0;
  double dump_step1 = 0;
  double dump_cum = 0;
  int ring_size = 0;
};

// One token's market: pool, bar accumulator, bounded organic flow.
struct TokenSim {
  TokenSim(CounterRng rng_in, PoolState pool_in, double max_move_pct_in)
      : rng(rng_in), pool(pool_in), max_move_pct(max_move_pct_in) {}

  CounterRng rng;
  PoolState pool;
  std::vector<OhlcvBar> bars;
  std::vector<Trade> trades;
  double max_move_pct;

  // bar accumulator
  std::int64_t bar_ts = 0;
  double bar_open = 0, bar_high = 0, bar_low = 0;
  double bar_volume = 0;

  // day state
  double prev_day_close = 0;
  double day_budget = 0;
  double day_realized = 0;
  int flip_seq = 0;  // deterministic side alternation for micro flow

  double spot() const { return pool.reserve_quote / pool.reserve_token; }

  void begin_day(double budget) {
    prev_day_close = bars.empty() ? spot() : bars.back().close;
    day_budget = budget;
    day_realized = 0;
  }

  void begin_hour(std::int64_t ts) {
    bar_ts = ts;
    bar_open = bar_high = bar_low = spot();
    bar_volume = 0;
  }

  void end_hour() {
    double close = spot();
    bar_high = std::max(bar_high, close);
    bar_low = std::min(bar_low, close);
    bars.push_back({bar_ts, bar_open, bar_high, bar_low, close, bar_volume});
  }

  void after_trade(double recorded_usd) {
    double s = spot();
    bar_high = std::max(bar_high, s);
    bar_low = std::min(bar_low, s);
    bar_volume += recorded_usd;
    day_realized += recorded_usd;
  }

  // Unconditional buy of `usd` quote; returns tokens received.
  double exec_buy(const std::string& maker, double usd, std::int64_t ts) {
    SwapOutcome o = swap_quote_in(pool, usd);
    pool = o.pool;
    trades.push_back({ts, maker, Side::Buy, usd});
    after_trade(usd);
    return o.amount_out;
  }

  // Unconditional sell of `tokens` tokens; records the quote received.
  double exec_sell_tokens(const std::string& maker, double tokens, std::int64_t ts) {
    SwapOutcome o = swap_token_in(pool, tokens);
    pool = o.pool;
    trades.push_back({ts, maker, Side::Sell, o.amount_out});
    after_trade(o.amount_out);
    return o.amount_out;
  }

  // Buy sized so the spot price multiplies by r (> 1).
  double exec_buy_to_mult(const std::string& maker, double r, std::int64_t ts) {
    double dq = quote_in_for_price_mult(pool, r);
    exec_buy(maker, dq, ts);
    return dq;
  }

  // Sell sized so the spot price multiplies by m (< 1).
  void exec_sell_to_mult(const std::string& maker, double m, std::int64_t ts) {
    double s = tokens_in_for_price_mult(pool, m);
    exec_sell_tokens(maker, s, ts);
  }

  // Bounded organic trade: if the post-trade spot would drift beyond
  // max_move_pct from the previous close, flip the side; if both directions
  // breach, skip.  Enforcing the bound per trade (not per close) caps the
  // intraday extremes too.  Returns true if a trade executed.
  bool organic_trade(const std::string& maker, Side side, double usd, std::int64_t ts,
                     bool budget_exempt = false) {
    if (!budget_exempt && day_realized + usd > day_budget) return false;
    for (int attempt = 0; attempt < 2; ++attempt) {
      double post_spot;
      double tokens = 0;
      if (side == Side::Buy) {
        post_spot = spot_price(swap_quote_in(pool, usd).pool);
      } else {
        tokens = usd / spot();
        if (!(tokens < pool.reserve_token)) return false;
        post_spot = spot_price(swap_token_in(pool, tokens).pool);
      }
      auto move = pct_change(prev_day_close, post_spot);
      if (move && std::fabs(*move) <= max_move_pct) {
        if (side == Side::Buy)
          exec_buy(maker, usd, ts);
        else
          exec_sell_tokens(maker, tokens, ts);
        return true;
      }
      side = side == Side::Buy ? Side::Sell : Side::Buy;
    }
    return false;
  }
};

struct KindParams {
  double move_cap = 12;        // organic |daily close change| bound, pct
  double target_log_mean = 0;  // ln of daily volume target center
  double target_sigma = 0.35;
  double target_lo = 80, target_hi = 900;
  double trade_cap = 60;
  bool tiny_trades = false;    // LPI-style micro flow
};

KindParams params_for(ScenarioKind kind, const Config& cfg) {
  KindParams p;
  p.target_log_mean = std::log(350.0);
  switch (kind) {
    case ScenarioKind::Organic:
    case ScenarioKind::Wash:
      p.move_cap = std::min(cfg.sim_organic_max_daily_move_pct, 12.0);
      break;
    case ScenarioKind::Lpi:
      p.move_cap = 8;
      p.target_log_mean = std::log(25.0);
      p.target_sigma = 0.3;
      p.target_lo = 10;
      p.target_hi = 45;
      p.tiny_trades = true;
      break;
    case ScenarioKind::PumpDump:
      p.move_cap = 10;
      break;
    case ScenarioKind::RugPull:
      p.move_cap = 15;
      p.target_log_mean = std::log(400.0);
      p.target_sigma = 0.25;
      p.target_lo = 250;
      break;
  }
  return p;
}

void run_organic_hour(TokenSim& sim, const KindParams& kp, const std::string& maker_prefix,
                      int hour) {
  // Micro flow alternates sides deterministically so shallow pools never
  // drift far from their opening price; normal flow draws sides at random
  // (the per-trade move clamp bounds the daily drift either way).
  auto pick_side = [&] {
    if (kp.tiny_trades) return (sim.flip_seq++ % 2) == 0 ? Side::Buy : Side::Sell;
    return sim.rng.chance(0.5) ? Side::Buy : Side::Sell;
  };
  // two anchor trades per day, budget-exempt, so no day ever goes quiet
  if (hour == 3 || hour == 15) {
    double size = std::clamp(sim.day_budget * 0.05, 0.5, 10.0);
    sim.organic_trade(maker_prefix + std::to_string(sim.rng.below(6)), pick_side(), size,
                      sim.bar_ts + 45, /*budget_exempt=*/true);
  }
  int count = static_cast<int>(sim.rng.below(kp.tiny_trades ? 3 : 4));
  for (int t = 0; t < count; ++t) {
    double size;
    if (kp.tiny_trades)
      size = sim.rng.uniform(0.5, 2.5);
    else
      size = std::clamp(sim.rng.lognormal(std::log(12.0), 0.8), 1.0, kp.trade_cap);
    Side side = pick_side();
    std::int64_t ts = sim.bar_ts + 120 + t * 600 + static_cast<std::int64_t>(sim.rng.below(300));
    sim.organic_trade(maker_prefix + std::to_string(sim.rng.below(6)), side, size, ts);
  }
}

std::vector<int> pick_wash_days(CounterRng& rng, int duration, int n) {
  const int lo = 5, hi = duration - 2;
  const int span = hi - lo + 1;
  if (span < n * 3)
    raise(ErrorCode::InvalidArgument,
          "duration too short for " + std::to_string(n) + " wash script days");
  const int step = span / n;
  std::vector<int> days;
  for (int j = 0; j < n; ++j) {
    int jitter_max = step - 3;
    int jitter = jitter_max > 0 ? static_cast<int>(rng.below(jitter_max + 1)) : 0;
    days.push_back(lo + j * step + jitter);
  }
  return days;
}

double mean_daily_volume(const std::vector<DailyAggregate>& daily, int from_idx, int to_idx) {
  double sum = 0;
  int n = 0;
  for (int i = std::max(0, from_idx); i <= to_idx && i < static_cast<int>(daily.size()); ++i) {
    sum += daily[i].volume_usd;
    ++n;
  }
  return n ? sum / n : 0;
}

void check(bool ok, const std::string& token, const std::string& what) {
  if (!ok) raise(ErrorCode::Internal, "scenario self-check failed for " + token + ": " + what);
}

// Recompute every scripted guarantee from the emitted data.  This is the
// generator auditing itself with the same arithmetic the detectors use; if
// a parameter combination cannot satisfy a guarantee, generation fails loudly
// instead of shipping data that contradicts its labels.
void self_check(const std::string& token_id, ScenarioKind kind, const TokenScript& script,
                const TokenSim& sim, const Config& cfg) {
  const std::vector<DailyAggregate> daily = daily_aggregate(sim.bars);

  for (std::size_t i = 0; i < daily.size(); ++i) {
    check(daily[i].volume_usd > 0, token_id, "zero-volume day " + std::to_string(i));
    int d = static_cast<int>(i);
    if (script.mode_for(d) != DayMode::OrganicDay) continue;
    if (i == 0) continue;
    auto surge = pct_change(daily[i - 1].volume_usd, daily[i].volume_usd);
    check(surge && *surge < 440.0, token_id, "organic day volume surge out of bounds");
    auto move = pct_change(daily[i - 1].close, daily[i].close);
    check(move && std::fabs(*move) <= sim.max_move_pct + 1.0, token_id,
          "organic day price move out of bounds");
  }

  auto day_trades = [&](int d) {
    std::vector<Trade> out;
    std::int64_t lo = sim.bars.front().ts + static_cast<std::int64_t>(d) * kSecondsPerDay;
    for (const auto& t : sim.trades)
      if (t.ts >= lo && t.ts < lo + kSecondsPerDay) out.push_back(t);
    return out;
  };

  switch (kind) {
    case ScenarioKind::Organic:
      break;
    case ScenarioKind::Wash: {
      for (int d : script.wash_days) {
        check(daily[d].volume_usd > 6.02 * daily[d - 1].volume_usd, token_id,
              "wash day volume lift below 6x");
        auto move = pct_change(daily[d - 1].close, daily[d].close);
        check(move && std::fabs(*move) < 4.0, token_id, "wash day price crept past 4%");
        std::map<std::string, std::pair<double, double>> flows;
        double total = 0;
        for (const auto& t : day_trades(d)) {
          auto& f = flows[t.maker_id];
          (t.side == Side::Buy ? f.first : f.second) += t.amount_usd;
          total += t.amount_usd;
        }
        double both_sided = 0;
        for (const auto& [maker, f] : flows) {
          check(f.first > 0 && f.second > 0, token_id, "wash day maker traded one side only");
          check(std::fabs(f.first - f.second) / std::max(f.first, f.second) <= 0.015, token_id,
                "wash ring maker imbalance above 1.5%");
          both_sided += f.first + f.second;
        }
        check(total > 0 && both_sided / total >= 0.995, token_id, "wash circular ratio below 0.995");
      }
      break;
    }
    case ScenarioKind::Lpi: {
      int d = script.lpi_day;
      auto move = pct_change(daily[d - 1].close, daily[d].close);
      check(move && *move > 150.0, token_id, "lpi day price change below 150%");
      check(daily[d].volume_usd < 900.0, token_id, "lpi day volume not below $900");
      std::set<std::string> makers;
      double buys = 0, total = 0;
      for (const auto& t : day_trades(d)) {
        makers.insert(t.maker_id);
        total += t.amount_usd;
        if (t.side == Side::Buy) buys += t.amount_usd;
      }
      check(makers.size() == 1, token_id, "lpi day should have exactly one maker");
      check(total > 0 && buys == total, token_id, "lpi day should be all buys");
      break;
    }
    case ScenarioKind::PumpDump: {
      int d = script.pump_day;
      std::size_t peak = static_cast<std::size_t>(d) * 24 + 14;
      std::size_t start = static_cast<std::size_t>(d) * 24 + 5;
      std::size_t trough = static_cast<std::size_t>(d) * 24 + 16;
      std::vector<double> closes(sim.bars.size());
      for (std::size_t i = 0; i < sim.bars.size(); ++i) closes[i] = sim.bars[i].close;
      std::vector<double> r = rsi(closes, static_cast<int>(cfg.pnd_rsi_period));
      check(r[peak] > 82.0, token_id, "pump peak RSI not above 82");
      check(closes[peak] > closes[peak - 1] && closes[peak] > closes[peak + 1], token_id,
            "pump peak is not a strict local maximum");
      auto rise = pct_change(closes[start], closes[peak]);
      check(rise && *rise > 60.0, token_id, "pump rise below 60%");
      double pump_vol = 0, prior_vol = 0;
      for (std::size_t i = start; i <= peak; ++i) pump_vol += sim.bars[i].volume_usd;
      for (std::size_t i = start - (peak - start) - 1; i < start; ++i)
        prior_vol += sim.bars[i].volume_usd;
      check(pump_vol > 6.3 * prior_vol, token_id, "pump volume not above 6.3x prior window");
      double drop = (closes[peak] - closes[trough]) / closes[peak] * 100.0;
      check(drop > 32.0, token_id, "dump below 32%");
      check((closes[peak] - closes[trough - 1]) / closes[peak] * 100.0 < 25.0, token_id,
            "dump first step overshot the trough threshold");
      double post_vol = 0;
      for (std::size_t i = trough + 1; i < sim.bars.size() && i <= trough + 48; ++i)
        post_vol += sim.bars[i].volume_usd;
      double pump_mean = pump_vol / (static_cast<double>(peak - start) + 1);
      check(post_vol / 48.0 < 0.45 * pump_mean, token_id, "post-dump volume not quiet");
      break;
    }
    case ScenarioKind::RugPull: {
      int d = script.rug_day;
      auto move = pct_change(daily[d - 1].close, daily[d].close);
      check(move && *move < -99.3, token_id, "rug day drop above -99.3%");
      double base = mean_daily_volume(daily, d - static_cast<int>(cfg.rug_baseline_days), d - 1);
      double post = mean_daily_volume(daily, d + 1, d + static_cast<int>(cfg.rug_post_days));
      check(base > 0 && post < 0.008 * base, token_id, "post-rug volume ratio above 0.008");
      break;
    }
  }
}

}  // namespace

ScenarioResult generate_scenario(const ScenarioSpec& spec, const Config& cfg) {
  if (spec.token_count < 1 || spec.token_count > 20000)
    raise(ErrorCode::InvalidArgument, "token_count must be in [1, 20000]");
  if (spec.t0 <= 0 || spec.t0 % kSecondsPerDay != 0)
    raise(ErrorCode::InvalidArgument, "t0 must be positive and day aligned");
  int min_days = 3;
  switch (spec.kind) {
    case ScenarioKind::Organic: min_days = 3; break;
    case ScenarioKind::Lpi: min_days = 10; break;
    case ScenarioKind::PumpDump: min_days = 14; break;
    case ScenarioKind::Wash:
      min_days = 7 + 3 * std::max(1, static_cast<int>(cfg.sim_wash_script_days));
      break;
    case ScenarioKind::RugPull: min_days = 21; break;
  }
  if (spec.duration_days < min_days || spec.duration_days > 3660)
    raise(ErrorCode::InvalidArgument, "duration_days must be in [" + std::to_string(min_days) +
                                          ", 3660] for kind " + to_string(spec.kind));
  if (!(cfg.sim_fee_fraction >= 0 && cfg.sim_fee_fraction <= 0.01))
    raise(ErrorCode::InvalidArgument, "sim.fee_fraction outside [0, 0.01]");
  if (!(cfg.sim_pump_target_mult >= 1.7 && cfg.sim_pump_target_mult <= 3.0))
    raise(ErrorCode::InvalidArgument,
          "sim.pump_target_mult outside [1.7, 3] — the pump script cannot keep its "
          "guarantees elsewhere");

  ScenarioResult res;
  const KindParams kp = params_for(spec.kind, cfg);
  constexpr Chain kChains[] = {Chain::Ethereum, Chain::Bsc, Chain::Solana, Chain::Base};

  for (int idx = 0; idx < spec.token_count; ++idx) {
    CounterRng rng(spec.seed, static_cast<std::uint64_t>(idx));

    char idbuf[16];
    std::snprintf(idbuf, sizeof(idbuf), "t%05d", idx);
    const std::string token_id = idbuf;

    TokenRecord tok;
    tok.token_id = token_id;
    tok.chain = kChains[idx % 4];
    tok.address = make_address(rng, tok.chain);
    tok.name = std::string(kAdjectives[rng.below(std::size(kAdjectives))]) + " " +
               kNouns[rng.below(std::size(kNouns))];
    tok.symbol = [&] {
      std::string s;
      for (char c : tok.name)
        if (c >= 'A' && c <= 'Z') s.push_back(c);
      return s + std::to_string(idx % 100);
    }();
    tok.created_at = spec.t0 - rng.range_i64(30, 300) * kSecondsPerDay - rng.range_i64(0, 86399);
    tok.sources = {"sim"};

    // pool: LPI runs a shallow frictionless pool so one whale buy is both
    // cheap and exactly priced by cost_to_multiply_price; everything else
    // trades against a deeper pool with the configured fee
    PoolState pool;
    if (spec.kind == ScenarioKind::Lpi) {
      pool.reserve_quote = cfg.sim_lpi_pool_depth_usd * rng.uniform(0.6, 1.4);
      pool.fee_fraction = 0;
    } else {
      pool.reserve_quote = cfg.sim_pool_depth_usd * rng.uniform(0.6, 1.6);
      pool.fee_fraction = cfg.sim_fee_fraction;
    }
    const double p0 = std::exp(rng.uniform(std::log(2e-6), std::log(5e-5)));
    pool.reserve_token = pool.reserve_quote / p0;

    TokenSim sim(rng, pool, kp.move_cap);

    // script layout
    TokenScript script;
    const int duration = spec.duration_days;
    switch (spec.kind) {
      case ScenarioKind::Organic:
        break;
      case ScenarioKind::Wash: {
        script.ring_size = 1 + static_cast<int>(sim.rng.below(3));
        script.wash_days = pick_wash_days(sim.rng, duration,
                                          std::max(1, static_cast<int>(cfg.sim_wash_script_days)));
        for (int d : script.wash_days) script.modes[d] = DayMode::WashDay;
        break;
      }
      case ScenarioKind::Lpi: {
        script.lpi_day = static_cast<int>(sim.rng.range_i64(5, duration - 5));
        script.lpi_mult = sim.rng.uniform(2.8, 12.0);
        script.modes[script.lpi_day] = DayMode::LpiDay;
        break;
      }
      case ScenarioKind::PumpDump: {
        script.pump_day = static_cast<int>(sim.rng.range_i64(3, duration - 6));
        script.pump_mult = cfg.sim_pump_target_mult * sim.rng.uniform(0.95, 1.15);
        script.dump_step1 = sim.rng.uniform(0.78, 0.82);
        script.dump_cum = sim.rng.uniform(0.58, 0.64);
        script.ring_size = 3;
        for (int d = script.pump_day - 2; d <= script.pump_day + 4; ++d)
          script.modes[d] = DayMode::ThinDay;
        script.modes[script.pump_day] = DayMode::PumpDay;
        break;
      }
      case ScenarioKind::RugPull: {
        script.rug_day = duration - 10;
        script.modes[script.rug_day] = DayMode::RugDay;
        for (int d = script.rug_day + 1; d < duration; ++d)
          script.modes[d] = DayMode::RugAfterDay;
        break;
      }
    }

    const std::string maker_prefix = token_id + "-m";
    double prev_realized = -1;  // no baseline on day 0

    for (int day = 0; day < duration; ++day) {
      const DayMode mode = script.mode_for(day);

      double target = std::clamp(sim.rng.lognormal(kp.target_log_mean, kp.target_sigma),
                                 kp.target_lo, kp.target_hi);
      double budget = target;
      if (prev_realized >= 0)
        budget = std::min(target, cfg.sim_organic_max_daily_volume_mult * prev_realized);
      sim.begin_day(budget);

      // wash volume target is set against the realized previous day
      double wash_target = 0;
      int wash_pairs_done = 0;
      double wash_done = 0;
      if (mode == DayMode::WashDay)
        wash_target = cfg.sim_wash_volume_mult * std::max(prev_realized, 1.0);

      for (int hour = 0; hour < 24; ++hour) {
        sim.begin_hour(spec.t0 + (static_cast<std::int64_t>(day) * 24 + hour) * kSecondsPerHour);
        switch (mode) {
          case DayMode::OrganicDay:
            run_organic_hour(sim, kp, maker_prefix, hour);
            break;
          case DayMode::ThinDay:
            if (hour == 2) {
              Side side = day % 2 == 0 ? Side::Buy : Side::Sell;
              if (day == script.pump_day - 1) side = Side::Buy;
              sim.organic_trade(maker_prefix + std::to_string(sim.rng.below(6)), side,
                                sim.rng.uniform(1.0, 2.0), sim.bar_ts + 90, true);
            }
            break;
          case DayMode::WashDay: {
            // Round-trips spread over hours 1..22: each hour works off its
            // proportional share of the day's target so the tape looks busy
            // all day and the target is always reached by hour 22.
            if (hour >= 1 && hour <= 22) {
              double hour_goal = wash_target * (hour / 22.0);
              if (hour == 22) hour_goal = wash_target;
              int k = 0;
              while (wash_done < hour_goal && k < 30) {
                double remaining = (wash_target - wash_done) / 1.99;
                double b = std::min(sim.rng.uniform(30.0, 90.0), std::max(0.5, remaining));
                const std::string maker =
                    token_id + "-w" + std::to_string(wash_pairs_done % script.ring_size);
                std::int64_t ts = sim.bar_ts + 100 + k * 110;
                double tokens = sim.exec_buy(maker, b, ts);
                double out = sim.exec_sell_tokens(maker, tokens, ts + 20);
                wash_done += b + out;
                ++wash_pairs_done;
                ++k;
              }
            }
            break;
          }
          case DayMode::LpiDay:
            if (hour == 12) {
              // Cap the whale's spend at $400 regardless of how the pool has
              // drifted, so the day still reads as low-volume; the floor keeps
              // the jump comfortably past a doubling.
              double y = sim.pool.reserve_quote;
              double m = std::max(2.8, std::min(script.lpi_mult,
                                                (1.0 + 400.0 / y) * (1.0 + 400.0 / y)));
              double dq = cost_to_multiply_price(sim.pool, m);
              sim.exec_buy(token_id + "-whale", dq, sim.bar_ts + 300);
            }
            break;
          case DayMode::PumpDay: {
            if (hour == 2) {
              // a sell here parks the pre-ramp closes at the window minimum,
              // and keeps a nonzero-volume print on the day
              sim.organic_trade(maker_prefix + std::to_string(sim.rng.below(6)), Side::Sell,
                                sim.rng.uniform(1.0, 2.0), sim.bar_ts + 90, true);
            } else if (hour >= 6 && hour <= 14) {
              double r = std::pow(script.pump_mult, 1.0 / 9.0);
              sim.exec_buy_to_mult(token_id + "-p" + std::to_string((hour - 6) % script.ring_size),
                                   r, sim.bar_ts + 200);
            } else if (hour == 15) {
              sim.exec_sell_to_mult(token_id + "-p0", script.dump_step1, sim.bar_ts + 200);
            } else if (hour == 16) {
              sim.exec_sell_to_mult(token_id + "-p1", script.dump_cum / script.dump_step1,
                                    sim.bar_ts + 200);
            }
            break;
          }
          case DayMode::RugDay:
            if (hour == 10) {
              sim.exec_sell_tokens(token_id + "-deployer",
                                   cfg.sim_rug_dump_reserve_mult * sim.pool.reserve_token,
                                   sim.bar_ts + 240);
            }
            break;
          case DayMode::RugAfterDay:
            if (hour == 2) {
              Side side = day % 2 == 0 ? Side::Buy : Side::Sell;
              sim.organic_trade(maker_prefix + std::to_string(sim.rng.below(6)), side,
                                sim.rng.uniform(0.25, 0.45), sim.bar_ts + 90, true);
            }
            break;
        }
        sim.end_hour();
      }
      prev_realized = sim.day_realized;
    }

    // holder snapshots: weekly, everything comfortably under the anomaly
    // thresholds — distribution anomalies are not part of these scripts
    std::vector<HolderSnapshot> snaps;
    for (int day = 0; day < duration; day += 7) {
      HolderSnapshot h;
      h.ts = spec.t0 + static_cast<std::int64_t>(day) * kSecondsPerDay + 43200;
      h.top10_share = sim.rng.uniform(5.0, 27.0);
      h.bundle_buy_share = sim.rng.uniform(0.5, 15.0);
      h.fresh_address_share = sim.rng.uniform(1.0, 20.0);
      h.airdrop_share = sim.rng.uniform(0.0, 10.0);
      h.honeypot = false;
      snaps.push_back(h);
    }

    self_check(token_id, spec.kind, script, sim, cfg);

    // labels
    auto day_ts = [&](int d) { return spec.t0 + static_cast<std::int64_t>(d) * kSecondsPerDay; };
    switch (spec.kind) {
      case ScenarioKind::Organic:
        break;
      case ScenarioKind::Wash:
        for (int d : script.wash_days) {
          res.labels.push_back({token_id, EventKind::WashZeroRisk, day_ts(d), day_ts(d) + kSecondsPerDay - 1});
          res.labels.push_back({token_id, EventKind::WashCircular, day_ts(d), day_ts(d) + kSecondsPerDay - 1});
        }
        res.labels.push_back({token_id, EventKind::WashPersistent, day_ts(script.wash_days.front()),
                              day_ts(script.wash_days.back()) + kSecondsPerDay - 1});
        break;
      case ScenarioKind::Lpi:
        res.labels.push_back({token_id, EventKind::Lpi, day_ts(script.lpi_day),
                              day_ts(script.lpi_day) + kSecondsPerDay - 1});
        break;
      case ScenarioKind::PumpDump:
        res.labels.push_back({token_id, EventKind::PumpAndDump,
                              day_ts(script.pump_day) + 5 * kSecondsPerHour,
                              day_ts(script.pump_day) + 16 * kSecondsPerHour});
        break;
      case ScenarioKind::RugPull:
        res.labels.push_back({token_id, EventKind::RugPull, day_ts(script.rug_day),
                              day_ts(script.rug_day + static_cast<int>(cfg.rug_post_days)) +
                                  kSecondsPerDay - 1});
        break;
    }

    res.data.tokens.emplace(token_id, std::move(tok));
    res.data.ohlcv.emplace(token_id, std::move(sim.bars));
    res.data.trades.emplace(token_id, std::move(sim.trades));
    res.data.holders.emplace(token_id, std::move(snaps));
  }

  return res;
}

void write_scenario_dir(const ScenarioResult& result, const std::string& dir) {
  write_dataset(result.data, dir);
  write_labels(result.labels, dir + "/labels.csv");
}

}  // namespace mw
