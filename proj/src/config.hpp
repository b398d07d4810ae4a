#pragma once

#include <map>
#include <string>
#include <string_view>

namespace mw {

// Every tunable threshold in one flat struct.  Defaults reproduce the
// production detection behavior; a config file or --config overrides
// individual keys (flat `key=value` lines, '#' comments).
struct Config {
  // wash trading
  double wash_volume_surge_pct = 500;     // day screen: volume vs previous day
  double wash_max_price_change_pct = 5;   // day screen: |close change| must stay below
  double wash_zero_risk_tolerance = 0.02; // per-maker |buy-sell| / max(buy,sell)
  double wash_circular_ratio = 0.99;      // both-sided maker volume share of day volume
  // liquidity pool inflation
  double lpi_min_price_change_pct = 100;
  double lpi_max_volume_growth_pct = 20;
  double lpi_low_volume_usd = 1000;
  double lpi_min_buy_ratio = 0.90;
  double lpi_max_unique_makers = 10;
  // holder / distribution anomalies
  double anomaly_share_threshold_pct = 30;
  // pump and dump
  double pnd_rsi_period = 14;
  double pnd_rsi_overbought = 80;
  double pnd_min_pump_pct = 50;
  double pnd_min_volume_surge_mult = 6;   // pump window volume vs equal prior window
  double pnd_max_pump_hours = 24;
  double pnd_min_dump_pct = 30;
  double pnd_dump_search_hours = 72;
  double pnd_post_dump_hours = 48;
  double pnd_max_post_dump_volume_ratio = 0.5;
  // rug pull
  double rug_min_drop_pct = 99;
  double rug_max_volume_ratio = 0.01;
  double rug_baseline_days = 7;
  double rug_post_days = 7;
  // returns
  double returns_window_days = 90;
  double returns_high_return_pct = 100;
  // classifier refinement
  double refine_max_price_usd = 0.80;
  double refine_min_market_cap_usd = 1e7;
  // scenario generator
  double sim_fee_fraction = 0.003;
  double sim_pool_depth_usd = 5000;        // organic-family quote reserve center
  double sim_lpi_pool_depth_usd = 100;     // shallow pools for inflation scripts
  double sim_wash_script_days = 3;
  double sim_wash_volume_mult = 7;         // script day volume vs previous day
  double sim_organic_max_daily_move_pct = 25;
  double sim_organic_max_daily_volume_mult = 3.3;
  double sim_pump_target_mult = 1.9;       // peak price vs ramp start
  double sim_rug_dump_reserve_mult = 20;   // deployer sells this multiple of the token reserve

  // Look up / override by key name ("wash.volume_surge_pct" etc).  Unknown
  // keys raise Error(InvalidArgument).
  double get(std::string_view key) const;
  void set(std::string_view key, double value);

  // All keys with current values, sorted by key.
  std::map<std::string, double> to_map() const;

  // Merge `key=value` lines from a file into *this.  Blank lines and lines
  // starting with '#' are ignored.  Raises Error(Parse) on anything else it
  // cannot understand, Error(Io) if the file cannot be read.
  void load_file(const std::string& path);
};

}  // namespace mw
