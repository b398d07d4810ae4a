#include "config.hpp"

#include <sstream>
#include <vector>

#include "csv.hpp"
#include "error.hpp"

namespace mw {

namespace {

struct KeyEntry {
  const char* key;
  double Config::*member;
};

constexpr KeyEntry kKeys[] = {
    {"wash.volume_surge_pct", &Config::wash_volume_surge_pct},
    {"wash.max_price_change_pct", &Config::wash_max_price_change_pct},
    {"wash.zero_risk_tolerance", &Config::wash_zero_risk_tolerance},
    {"wash.circular_ratio", &Config::wash_circular_ratio},
    {"lpi.min_price_change_pct", &Config::lpi_min_price_change_pct},
    {"lpi.max_volume_growth_pct", &Config::lpi_max_volume_growth_pct},
    {"lpi.low_volume_usd", &Config::lpi_low_volume_usd},
    {"lpi.min_buy_ratio", &Config::lpi_min_buy_ratio},
    {"lpi.max_unique_makers", &Config::lpi_max_unique_makers},
    {"anomaly.share_threshold_pct", &Config::anomaly_share_threshold_pct},
    {"pnd.rsi_period", &Config::pnd_rsi_period},
    {"pnd.rsi_overbought", &Config::pnd_rsi_overbought},
    {"pnd.min_pump_pct", &Config::pnd_min_pump_pct},
    {"pnd.min_volume_surge_mult", &Config::pnd_min_volume_surge_mult},
    {"pnd.max_pump_hours", &Config::pnd_max_pump_hours},
    {"pnd.min_dump_pct", &Config::pnd_min_dump_pct},
    {"pnd.dump_search_hours", &Config::pnd_dump_search_hours},
    {"pnd.post_dump_hours", &Config::pnd_post_dump_hours},
    {"pnd.max_post_dump_volume_ratio", &Config::pnd_max_post_dump_volume_ratio},
    {"rug.min_drop_pct", &Config::rug_min_drop_pct},
    {"rug.max_volume_ratio", &Config::rug_max_volume_ratio},
    {"rug.baseline_days", &Config::rug_baseline_days},
    {"rug.post_days", &Config::rug_post_days},
    {"returns.window_days", &Config::returns_window_days},
    {"returns.high_return_pct", &Config::returns_high_return_pct},
    {"refine.max_price_usd", &Config::refine_max_price_usd},
    {"refine.min_market_cap_usd", &Config::refine_min_market_cap_usd},
    {"sim.fee_fraction", &Config::sim_fee_fraction},
    {"sim.pool_depth_usd", &Config::sim_pool_depth_usd},
    {"sim.lpi_pool_depth_usd", &Config::sim_lpi_pool_depth_usd},
    {"sim.wash_script_days", &Config::sim_wash_script_days},
    {"sim.wash_volume_mult", &Config::sim_wash_volume_mult},
    {"sim.organic_max_daily_move_pct", &Config::sim_organic_max_daily_move_pct},
    {"sim.organic_max_daily_volume_mult", &Config::sim_organic_max_daily_volume_mult},
    {"sim.pump_target_mult", &Config::sim_pump_target_mult},
    {"sim.rug_dump_reserve_mult", &Config::sim_rug_dump_reserve_mult},
};

const KeyEntry* find_key(std::string_view key) {
  for (const auto& e : kKeys)
    if (key == e.key) return &e;
  return nullptr;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

double Config::get(std::string_view key) const {
  const KeyEntry* e = find_key(key);
  if (!e) raise(ErrorCode::InvalidArgument, "unknown config key: " + std::string(key));
  return this->*(e->member);
}

void Config::set(std::string_view key, double value) {
  const KeyEntry* e = find_key(key);
  if (!e) raise(ErrorCode::InvalidArgument, "unknown config key: " + std::string(key));
  this->*(e->member) = value;
}

std::map<std::string, double> Config::to_map() const {
  std::map<std::string, double> out;
  for (const auto& e : kKeys) out[e.key] = this->*(e.member);
  return out;
}

void Config::load_file(const std::string& path) {
  std::string text = read_text_file(path);
  std::istringstream in(text);
  std::string raw;
  std::int64_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos)
      raise(ErrorCode::Parse, path + ":" + std::to_string(lineno) + ": expected key=value");
    std::string_view key = trim(line.substr(0, eq));
    std::string_view val = trim(line.substr(eq + 1));
    auto num = parse_double(val);
    if (!num)
      raise(ErrorCode::Parse, path + ":" + std::to_string(lineno) + ": bad numeric value '" +
                                  std::string(val) + "'");
    const KeyEntry* e = find_key(key);
    if (!e)
      raise(ErrorCode::InvalidArgument,
            path + ":" + std::to_string(lineno) + ": unknown config key: " + std::string(key));
    this->*(e->member) = *num;
  }
}

}  // namespace mw
