#include "analytics.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <limits>
#include <set>
#include <sstream>

#include "csv.hpp"
#include "error.hpp"
#include "events_io.hpp"

namespace mw {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

// Latest bar index with ts <= limit, or -1.
std::ptrdiff_t latest_at_or_before(const std::vector<OhlcvBar>& bars, std::int64_t limit) {
  auto it = std::upper_bound(bars.begin(), bars.end(), limit,
                             [](std::int64_t t, const OhlcvBar& b) { return t < b.ts; });
  return it - bars.begin() - 1;
}

}  // namespace

std::vector<ReturnRecord> compute_returns(const Dataset& data, std::int64_t t0,
                                          const Config& cfg) {
  if (t0 <= 0) raise(ErrorCode::InvalidArgument, "returns t0 must be positive");
  if (!(cfg.returns_window_days > 0))
    raise(ErrorCode::InvalidArgument, "returns.window_days must be positive");
  const auto window_s =
      static_cast<std::int64_t>(std::llround(cfg.returns_window_days * kSecondsPerDay));
  const std::int64_t t_end = t0 + window_s;

  std::vector<ReturnRecord> out;
  out.reserve(data.tokens.size());
  for (const auto& [token_id, tok] : data.tokens) {
    ReturnRecord r;
    r.token_id = token_id;
    r.chain = tok.chain;
    r.p_start = kNan;
    r.p_end = kNan;
    r.return_pct = kNan;
    r.window_volume_usd = 0;

    auto bars_it = data.ohlcv.find(token_id);
    if (bars_it != data.ohlcv.end()) {
      const std::vector<OhlcvBar>& bars = bars_it->second;
      std::ptrdiff_t si = latest_at_or_before(bars, t0);
      if (si >= 0) r.p_start = bars[static_cast<std::size_t>(si)].close;
      std::ptrdiff_t ei = latest_at_or_before(bars, t_end);
      if (ei >= 0 && bars[static_cast<std::size_t>(ei)].ts > t0)
        r.p_end = bars[static_cast<std::size_t>(ei)].close;
      for (std::ptrdiff_t i = si + 1; i <= ei; ++i)
        r.window_volume_usd += bars[static_cast<std::size_t>(i)].volume_usd;
    }

    if (std::isnan(r.p_start) || std::isnan(r.p_end) || r.p_start == 0) {
      r.category = ReturnCategory::Missing;
    } else {
      r.return_pct = (r.p_end - r.p_start) / r.p_start * 100.0;
      if (r.return_pct < 0)
        r.category = ReturnCategory::Negative;
      else if (r.return_pct == 0)
        r.category = r.window_volume_usd == 0 ? ReturnCategory::Inactive
                                              : ReturnCategory::StableActive;
      else if (r.return_pct > cfg.returns_high_return_pct)
        r.category = ReturnCategory::HighReturn;
      else
        r.category = ReturnCategory::Positive;
    }
    out.push_back(std::move(r));
  }
  return out;
}

static const char* kReturnsHeader =
    "token_id,chain,p_start,p_end,return_pct,category,window_volume_usd";

void write_returns_csv(const std::vector<ReturnRecord>& records, const std::string& path) {
  std::string out{kReturnsHeader};
  out.push_back('\n');
  for (const auto& r : records)
    out += csv_row({r.token_id, to_string(r.chain), fmt_double(r.p_start), fmt_double(r.p_end),
                    fmt_double(r.return_pct), to_string(r.category),
                    fmt_double(r.window_volume_usd)});
  write_text_file(path, out);
}

std::vector<ReturnRecord> load_returns_csv(const std::string& path) {
  std::string text = read_text_file(path);
  std::istringstream in(text);
  CsvReader reader(in);
  std::vector<std::string> row;
  if (!reader.next(row) || csv_row(row) != std::string(kReturnsHeader) + "\n")
    raise(ErrorCode::Parse, path + ": bad header, expected " + kReturnsHeader);

  auto number_or_nan = [&](const std::string& field) {
    if (field.empty()) return kNan;
    auto v = parse_double(field);
    if (!v)
      raise(ErrorCode::Parse,
            path + " line " + std::to_string(reader.line()) + ": bad number '" + field + "'");
    return *v;
  };

  std::vector<ReturnRecord> out;
  while (reader.next(row)) {
    const std::string where = path + " line " + std::to_string(reader.line());
    if (row.size() != 7)
      raise(ErrorCode::Parse, where + ": expected 7 fields, got " + std::to_string(row.size()));
    ReturnRecord r;
    r.token_id = row[0];
    auto chain = parse_chain(row[1]);
    if (!chain) raise(ErrorCode::Parse, where + ": unknown chain '" + row[1] + "'");
    r.chain = *chain;
    r.p_start = number_or_nan(row[2]);
    r.p_end = number_or_nan(row[3]);
    r.return_pct = number_or_nan(row[4]);
    auto cat = parse_return_category(row[5]);
    if (!cat) raise(ErrorCode::Parse, where + ": unknown category '" + row[5] + "'");
    r.category = *cat;
    r.window_volume_usd = number_or_nan(row[6]);
    out.push_back(std::move(r));
  }
  return out;
}

PrevalenceReport prevalence(const std::vector<ReturnRecord>& returns,
                            const std::vector<DetectionEvent>& events) {
  PrevalenceReport rep;
  rep.universe = static_cast<std::int64_t>(returns.size());

  std::set<std::string> high;
  for (const auto& r : returns) {
    ChainStats& cs = rep.per_chain[r.chain];
    ++cs.listed;
    if (r.category != ReturnCategory::Missing) ++cs.with_price;
    if (r.category == ReturnCategory::HighReturn) {
      ++cs.high_return;
      high.insert(r.token_id);
    }
  }
  rep.high_return = static_cast<std::int64_t>(high.size());
  for (Chain c : {Chain::Ethereum, Chain::Bsc, Chain::Solana, Chain::Base})
    rep.per_chain[c];  // make every chain present even with zero tokens

  constexpr EventKind kAllKinds[] = {
      EventKind::WashZeroRisk,   EventKind::WashCircular, EventKind::WashPersistent,
      EventKind::Lpi,            EventKind::PumpAndDump,  EventKind::RugPull,
      EventKind::AnomalyTopHolders, EventKind::AnomalyBundle, EventKind::AnomalyFresh,
      EventKind::AnomalyAirdrop, EventKind::AnomalyHoneypot};

  std::map<EventKind, std::set<std::string>> by_kind;
  std::set<std::string> wash, lpi, anomaly, any_growth;
  std::vector<DetectionEvent> growth_events, extraction_events;
  for (const auto& ev : events) {
    if (is_growth_kind(ev.kind))
      growth_events.push_back(ev);
    else
      extraction_events.push_back(ev);
    if (!high.count(ev.token_id)) continue;
    by_kind[ev.kind].insert(ev.token_id);
    if (is_growth_kind(ev.kind)) {
      any_growth.insert(ev.token_id);
      switch (ev.kind) {
        case EventKind::WashZeroRisk:
        case EventKind::WashCircular:
        case EventKind::WashPersistent:
          wash.insert(ev.token_id);
          break;
        case EventKind::Lpi:
          lpi.insert(ev.token_id);
          break;
        default:
          anomaly.insert(ev.token_id);
          break;
      }
    }
  }
  for (EventKind k : kAllKinds)
    rep.kind_tokens[k] = static_cast<std::int64_t>(by_kind[k].size());
  rep.wash_tokens = static_cast<std::int64_t>(wash.size());
  rep.lpi_tokens = static_cast<std::int64_t>(lpi.size());
  rep.anomaly_tokens = static_cast<std::int64_t>(anomaly.size());
  rep.union_tokens = static_cast<std::int64_t>(any_growth.size());
  rep.union_pct = rep.high_return > 0
                      ? 100.0 * static_cast<double>(rep.union_tokens) /
                            static_cast<double>(rep.high_return)
                      : kNan;
  rep.linkage = linkage(growth_events, extraction_events);
  return rep;
}

namespace {

// Per-category token counts, every category present.
std::map<ReturnCategory, std::int64_t> category_counts(const std::vector<ReturnRecord>& returns) {
  std::map<ReturnCategory, std::int64_t> counts;
  for (ReturnCategory c :
       {ReturnCategory::Missing, ReturnCategory::Negative, ReturnCategory::Inactive,
        ReturnCategory::StableActive, ReturnCategory::Positive, ReturnCategory::HighReturn})
    counts[c] = 0;
  for (const auto& r : returns) ++counts[r.category];
  return counts;
}

std::string json_int(std::int64_t v) { return std::to_string(v); }

void append_kv(std::string& out, const char* key, const std::string& value, bool last = false) {
  out += json_escape(key);
  out.push_back(':');
  out += value;
  if (!last) out.push_back(',');
}

std::string report_json(const PrevalenceReport& prev, const std::vector<ReturnRecord>& returns,
                        const std::vector<DetectionEvent>& events) {
  std::map<std::string, std::int64_t> event_counts;  // events (not tokens) per kind
  for (const auto& ev : events) ++event_counts[to_string(ev.kind)];

  std::string j = "{";

  j += "\"events\":{\"by_kind\":{";
  {
    std::map<std::string, std::int64_t> all;
    for (const auto& [k, n] : prev.kind_tokens) all[to_string(k)] = 0;
    for (const auto& [name, n] : event_counts) all[name] = n;
    bool first = true;
    for (const auto& [name, n] : all) {
      if (!first) j.push_back(',');
      first = false;
      append_kv(j, name.c_str(), json_int(n), true);
    }
  }
  j += "},\"total\":" + json_int(static_cast<std::int64_t>(events.size())) + "},";

  j += "\"linkage\":{";
  append_kv(j, "extraction_tokens", json_int(prev.linkage.extraction_tokens));
  append_kv(j, "linked_pct", json_num(prev.linkage.linked_pct));
  append_kv(j, "linked_tokens", json_int(prev.linkage.linked_tokens), true);
  j += "},";

  j += "\"per_chain\":{";
  {
    std::map<std::string, ChainStats> chains;  // keyed by name for sorted keys
    for (const auto& [c, cs] : prev.per_chain) chains[to_string(c)] = cs;
    bool first = true;
    for (const auto& [name, cs] : chains) {
      if (!first) j.push_back(',');
      first = false;
      j += json_escape(name) + ":{";
      append_kv(j, "high_return", json_int(cs.high_return));
      append_kv(j, "listed", json_int(cs.listed));
      append_kv(j, "with_price", json_int(cs.with_price), true);
      j.push_back('}');
    }
  }
  j += "},";

  j += "\"prevalence\":{";
  append_kv(j, "anomaly_tokens", json_int(prev.anomaly_tokens));
  j += "\"by_kind\":{";
  {
    std::map<std::string, std::int64_t> named;
    for (const auto& [k, n] : prev.kind_tokens) named[to_string(k)] = n;
    bool first = true;
    for (const auto& [name, n] : named) {
      if (!first) j.push_back(',');
      first = false;
      append_kv(j, name.c_str(), json_int(n), true);
    }
  }
  j += "},";
  append_kv(j, "high_return", json_int(prev.high_return));
  append_kv(j, "lpi_tokens", json_int(prev.lpi_tokens));
  append_kv(j, "union_pct", json_num(prev.union_pct));
  append_kv(j, "union_tokens", json_int(prev.union_tokens));
  append_kv(j, "universe", json_int(prev.universe));
  append_kv(j, "wash_tokens", json_int(prev.wash_tokens), true);
  j += "},";

  j += "\"returns\":{\"by_category\":{";
  {
    std::map<std::string, std::int64_t> named;
    for (const auto& [c, n] : category_counts(returns)) named[to_string(c)] = n;
    bool first = true;
    for (const auto& [name, n] : named) {
      if (!first) j.push_back(',');
      first = false;
      append_kv(j, name.c_str(), json_int(n), true);
    }
  }
  j += "},\"universe\":" + json_int(prev.universe) + "}";

  j += "}\n";
  return j;
}

std::string summary_csv(const PrevalenceReport& prev, const std::vector<ReturnRecord>& returns,
                        const std::vector<DetectionEvent>& events) {
  std::string out = "section,metric,value\n";
  auto row_i = [&](const std::string& section, const std::string& metric, std::int64_t v) {
    out += csv_row({section, metric, fmt_i64(v)});
  };
  auto row_f = [&](const std::string& section, const std::string& metric, double v) {
    out += csv_row({section, metric, fmt_fixed4(v)});
  };

  auto cats = category_counts(returns);
  row_i("returns", "universe", prev.universe);
  row_i("returns", "missing", cats[ReturnCategory::Missing]);
  row_i("returns", "negative", cats[ReturnCategory::Negative]);
  row_i("returns", "inactive", cats[ReturnCategory::Inactive]);
  row_i("returns", "stable_active", cats[ReturnCategory::StableActive]);
  row_i("returns", "positive", cats[ReturnCategory::Positive]);
  row_i("returns", "high_return", cats[ReturnCategory::HighReturn]);
  row_i("returns", "positive_or_high",
        cats[ReturnCategory::Positive] + cats[ReturnCategory::HighReturn]);

  row_i("prevalence", "high_return", prev.high_return);
  row_i("prevalence", "wash_trading_tokens", prev.wash_tokens);
  row_i("prevalence", "lpi_tokens", prev.lpi_tokens);
  row_i("prevalence", "anomaly_tokens", prev.anomaly_tokens);
  row_i("prevalence", "pump_dump_tokens", prev.kind_tokens.at(EventKind::PumpAndDump));
  row_i("prevalence", "rug_pull_tokens", prev.kind_tokens.at(EventKind::RugPull));
  row_i("prevalence", "union_tokens", prev.union_tokens);
  row_f("prevalence", "union_pct", prev.union_pct);

  row_i("linkage", "extraction_tokens", prev.linkage.extraction_tokens);
  row_i("linkage", "linked_tokens", prev.linkage.linked_tokens);
  row_f("linkage", "linked_pct", prev.linkage.linked_pct);

  std::map<std::string, std::int64_t> event_counts;
  for (const auto& [k, n] : prev.kind_tokens) event_counts[to_string(k)] = 0;
  for (const auto& ev : events) ++event_counts[to_string(ev.kind)];
  for (const auto& [name, n] : event_counts) row_i("events", name, n);

  std::map<std::string, ChainStats> chains;
  for (const auto& [c, cs] : prev.per_chain) chains[to_string(c)] = cs;
  for (const auto& [name, cs] : chains) {
    const std::string section = "chain_" + name;
    row_i(section, "listed", cs.listed);
    row_i(section, "with_price", cs.with_price);
    row_i(section, "high_return", cs.high_return);
    row_f(section, "high_return_pct_of_listed",
          cs.listed > 0 ? 100.0 * static_cast<double>(cs.high_return) /
                              static_cast<double>(cs.listed)
                        : kNan);
    row_f(section, "high_return_pct_of_priced",
          cs.with_price > 0 ? 100.0 * static_cast<double>(cs.high_return) /
                                  static_cast<double>(cs.with_price)
                            : kNan);
  }
  return out;
}

}  // namespace

void render_report(const PrevalenceReport& prev, const std::vector<ReturnRecord>& returns,
                   const std::vector<DetectionEvent>& events, const std::string& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) raise(ErrorCode::Io, out_dir + ": cannot create directory: " + ec.message());

  std::vector<DetectionEvent> ordered = events;
  std::sort(ordered.begin(), ordered.end(), event_order);

  write_events_jsonl(ordered, out_dir + "/events.jsonl");
  write_text_file(out_dir + "/report.json", report_json(prev, returns, ordered));
  write_text_file(out_dir + "/summary.csv", summary_csv(prev, returns, ordered));
}

}  // namespace mw
