#include "dataset.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <limits>
#include <sstream>

#include "address.hpp"
#include "csv.hpp"
#include "error.hpp"

namespace mw {

namespace {

constexpr const char* kTokensHeader = "token_id,chain,address,name,symbol,created_at,sources";
constexpr const char* kOhlcvHeader = "token_id,ts,open,high,low,close,volume_usd";
constexpr const char* kTradesHeader = "token_id,ts,maker_id,side,amount_usd";
constexpr const char* kHoldersHeader =
    "token_id,ts,top10_share,bundle_buy_share,fresh_address_share,airdrop_share,honeypot";
constexpr const char* kEconomicsHeader =
    "token_id,ts,price_usd,circulating_supply,market_cap_usd,liquidity_usd";
constexpr const char* kLabelsHeader = "token_id,kind,window_start,window_end";

std::vector<std::string> split_header(const char* header) {
  std::vector<std::string> out;
  std::string cur;
  for (const char* p = header; *p; ++p) {
    if (*p == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(*p);
    }
  }
  out.push_back(cur);
  return out;
}

// Opens the CSV, checks the exact header, hands each data row to `row_fn`.
template <typename RowFn>
void for_each_row(const std::string& path, const char* expected_header, RowFn&& row_fn) {
  std::string text = read_text_file(path);
  std::istringstream in(text);
  CsvReader reader(in);
  std::vector<std::string> fields;
  if (!reader.next(fields))
    raise(ErrorCode::Parse, path + ": empty file, expected header " + expected_header);
  if (fields != split_header(expected_header))
    raise(ErrorCode::Parse, path + ": bad header, expected " + expected_header);
  while (reader.next(fields)) row_fn(fields);
}

// NaN for an empty field, nullopt for garbage.
std::optional<double> parse_optional_double(const std::string& s) {
  if (s.empty()) return std::numeric_limits<double>::quiet_NaN();
  return parse_double(s);
}

void load_tokens(const std::string& path, Dataset& ds, LoadReport& rep) {
  for_each_row(path, kTokensHeader, [&](const std::vector<std::string>& f) {
    if (f.size() != 7) return rep.reject("malformed-field");
    const std::string& id = f[0];
    if (id.empty()) return rep.reject("malformed-field");
    auto chain = parse_chain(f[1]);
    if (!chain) return rep.reject("bad-chain");
    if (auto err = validate_address(*chain, f[2])) return rep.reject(to_string(*err));
    auto created = parse_i64(f[5]);
    if (!created) return rep.reject("malformed-field");
    if (*created <= 0) return rep.reject("bad-created-at");

    std::set<std::string> sources;
    std::string cur;
    for (char c : f[6]) {
      if (c == '|') {
        if (!cur.empty()) sources.insert(cur);
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    if (!cur.empty()) sources.insert(cur);

    auto it = ds.tokens.find(id);
    if (it != ds.tokens.end()) {
      // Same token seen again: merge, count, keep first identity.
      it->second.sources.insert(sources.begin(), sources.end());
      it->second.created_at = std::min(it->second.created_at, *created);
      rep.reject("duplicate-token");
      return;
    }
    TokenRecord tok;
    tok.token_id = id;
    tok.chain = *chain;
    tok.address = f[2];
    tok.name = f[3];
    tok.symbol = f[4];
    tok.created_at = *created;
    tok.sources = std::move(sources);
    ds.tokens.emplace(id, std::move(tok));
    ++rep.rows_loaded;
    ++rep.loaded_by_file["tokens"];
  });
}

void load_ohlcv(const std::string& path, Dataset& ds, LoadReport& rep) {
  for_each_row(path, kOhlcvHeader, [&](const std::vector<std::string>& f) {
    if (f.size() != 7) return rep.reject("malformed-field");
    if (!ds.tokens.count(f[0])) return rep.reject("orphan-row");
    auto ts = parse_i64(f[1]);
    auto open = parse_double(f[2]);
    auto high = parse_double(f[3]);
    auto low = parse_double(f[4]);
    auto close = parse_double(f[5]);
    auto vol = parse_double(f[6]);
    if (!ts || !open || !high || !low || !close || !vol) return rep.reject("malformed-field");
    if (*ts % kSecondsPerHour != 0 || *ts < 0) return rep.reject("ts-not-hour-aligned");
    if (*open < 0 || *high < 0 || *low < 0 || *close < 0 || *vol < 0)
      return rep.reject("negative-value");
    if (*low > std::min(*open, *close) || std::max(*open, *close) > *high)
      return rep.reject("ohlc-range");
    ds.ohlcv[f[0]].push_back({*ts, *open, *high, *low, *close, *vol});
    ++rep.rows_loaded;
    ++rep.loaded_by_file["ohlcv"];
  });

  // Sort and enforce strictly increasing ts per token.  On duplicates the
  // last row in input order wins (stable sort keeps input order inside a
  // tie run).
  for (auto& [id, bars] : ds.ohlcv) {
    std::stable_sort(bars.begin(), bars.end(),
                     [](const OhlcvBar& a, const OhlcvBar& b) { return a.ts < b.ts; });
    std::vector<OhlcvBar> dedup;
    dedup.reserve(bars.size());
    for (std::size_t i = 0; i < bars.size(); ++i) {
      if (i + 1 < bars.size() && bars[i + 1].ts == bars[i].ts) {
        rep.reject("duplicate-ts");
        --rep.rows_loaded;
        --rep.loaded_by_file["ohlcv"];
        continue;
      }
      dedup.push_back(bars[i]);
    }
    bars = std::move(dedup);
  }
}

void load_trades(const std::string& path, Dataset& ds, LoadReport& rep) {
  for_each_row(path, kTradesHeader, [&](const std::vector<std::string>& f) {
    if (f.size() != 5) return rep.reject("malformed-field");
    if (!ds.tokens.count(f[0])) return rep.reject("orphan-row");
    auto ts = parse_i64(f[1]);
    if (!ts || *ts < 0) return rep.reject("malformed-field");
    if (f[2].empty()) return rep.reject("malformed-field");
    auto side = parse_side(f[3]);
    if (!side) return rep.reject("bad-side");
    auto amount = parse_double(f[4]);
    if (!amount) return rep.reject("malformed-field");
    if (!(*amount > 0)) return rep.reject("non-positive-amount");
    ds.trades[f[0]].push_back({*ts, f[2], *side, *amount});
    ++rep.rows_loaded;
    ++rep.loaded_by_file["trades"];
  });
  for (auto& [id, trades] : ds.trades)
    std::stable_sort(trades.begin(), trades.end(),
                     [](const Trade& a, const Trade& b) { return a.ts < b.ts; });
}

void load_holders(const std::string& path, Dataset& ds, LoadReport& rep) {
  for_each_row(path, kHoldersHeader, [&](const std::vector<std::string>& f) {
    if (f.size() != 7) return rep.reject("malformed-field");
    if (!ds.tokens.count(f[0])) return rep.reject("orphan-row");
    auto ts = parse_i64(f[1]);
    if (!ts || *ts < 0) return rep.reject("malformed-field");
    double shares[4];
    for (int i = 0; i < 4; ++i) {
      auto v = parse_double(f[2 + i]);
      if (!v) return rep.reject("malformed-field");
      shares[i] = *v;
    }
    for (double s : shares)
      if (s < 0 || s > 100) return rep.reject("share-out-of-range");
    bool honeypot;
    if (f[6] == "0")
      honeypot = false;
    else if (f[6] == "1")
      honeypot = true;
    else
      return rep.reject("malformed-field");
    ds.holders[f[0]].push_back({*ts, shares[0], shares[1], shares[2], shares[3], honeypot});
    ++rep.rows_loaded;
    ++rep.loaded_by_file["holders"];
  });
  for (auto& [id, snaps] : ds.holders)
    std::stable_sort(snaps.begin(), snaps.end(),
                     [](const HolderSnapshot& a, const HolderSnapshot& b) { return a.ts < b.ts; });
}

void load_economics(const std::string& path, Dataset& ds, LoadReport& rep) {
  for_each_row(path, kEconomicsHeader, [&](const std::vector<std::string>& f) {
    if (f.size() != 6) return rep.reject("malformed-field");
    if (!ds.tokens.count(f[0])) return rep.reject("orphan-row");
    auto ts = parse_i64(f[1]);
    if (!ts || *ts < 0) return rep.reject("malformed-field");
    auto price = parse_optional_double(f[2]);
    auto supply = parse_optional_double(f[3]);
    auto mcap = parse_optional_double(f[4]);
    auto liq = parse_optional_double(f[5]);
    if (!price || !supply || !mcap || !liq) return rep.reject("malformed-field");
    if ((!std::isnan(*price) && *price < 0) || (!std::isnan(*supply) && *supply < 0) ||
        (!std::isnan(*mcap) && *mcap < 0) || (!std::isnan(*liq) && *liq < 0))
      return rep.reject("negative-value");
    if (!std::isnan(*price) && !std::isnan(*supply) && !std::isnan(*mcap)) {
      double prod = market_cap(*price, *supply);
      double scale = std::max(std::fabs(*mcap), std::fabs(prod));
      if (std::fabs(*mcap - prod) > 1e-6 * scale) return rep.reject("marketcap-mismatch");
    }
    ds.economics[f[0]].push_back({*ts, *price, *supply, *mcap, *liq});
    ++rep.rows_loaded;
    ++rep.loaded_by_file["economics"];
  });
  for (auto& [id, rows] : ds.economics)
    std::stable_sort(rows.begin(), rows.end(),
                     [](const TokenEconomics& a, const TokenEconomics& b) { return a.ts < b.ts; });
}

}  // namespace

Dataset load_dataset(const LoadPaths& paths, LoadReport* report) {
  LoadReport local;
  LoadReport& rep = report ? *report : local;
  rep = LoadReport{};
  Dataset ds;
  load_tokens(paths.tokens, ds, rep);
  load_ohlcv(paths.ohlcv, ds, rep);
  load_trades(paths.trades, ds, rep);
  load_holders(paths.holders, ds, rep);
  if (!paths.economics.empty()) load_economics(paths.economics, ds, rep);
  return ds;
}

Dataset load_dataset_dir(const std::string& dir, LoadReport* report) {
  LoadPaths paths;
  paths.tokens = dir + "/tokens.csv";
  paths.ohlcv = dir + "/ohlcv.csv";
  paths.trades = dir + "/trades.csv";
  paths.holders = dir + "/holders.csv";
  std::string econ = dir + "/economics.csv";
  if (std::filesystem::exists(econ)) paths.economics = econ;
  return load_dataset(paths, report);
}

void write_dataset(const Dataset& ds, const std::string& dir) {
  std::filesystem::create_directories(dir);

  std::string tokens = std::string(kTokensHeader) + "\n";
  for (const auto& [id, tok] : ds.tokens) {
    std::string sources;
    for (const auto& s : tok.sources) {
      if (!sources.empty()) sources.push_back('|');
      sources += s;
    }
    tokens += csv_row({tok.token_id, to_string(tok.chain), tok.address, tok.name, tok.symbol,
                       fmt_i64(tok.created_at), sources});
  }
  write_text_file(dir + "/tokens.csv", tokens);

  std::string ohlcv = std::string(kOhlcvHeader) + "\n";
  for (const auto& [id, bars] : ds.ohlcv)
    for (const auto& b : bars)
      ohlcv += csv_row({id, fmt_i64(b.ts), fmt_double(b.open), fmt_double(b.high),
                        fmt_double(b.low), fmt_double(b.close), fmt_double(b.volume_usd)});
  write_text_file(dir + "/ohlcv.csv", ohlcv);

  std::string trades = std::string(kTradesHeader) + "\n";
  for (const auto& [id, rows] : ds.trades)
    for (const auto& t : rows)
      trades += csv_row({id, fmt_i64(t.ts), t.maker_id, to_string(t.side), fmt_double(t.amount_usd)});
  write_text_file(dir + "/trades.csv", trades);

  std::string holders = std::string(kHoldersHeader) + "\n";
  for (const auto& [id, rows] : ds.holders)
    for (const auto& h : rows)
      holders += csv_row({id, fmt_i64(h.ts), fmt_double(h.top10_share), fmt_double(h.bundle_buy_share),
                          fmt_double(h.fresh_address_share), fmt_double(h.airdrop_share),
                          h.honeypot ? "1" : "0"});
  write_text_file(dir + "/holders.csv", holders);

  std::string econ = std::string(kEconomicsHeader) + "\n";
  for (const auto& [id, rows] : ds.economics)
    for (const auto& e : rows)
      econ += csv_row({id, fmt_i64(e.ts), fmt_double(e.price_usd), fmt_double(e.circulating_supply),
                       fmt_double(e.market_cap_usd), fmt_double(e.liquidity_usd)});
  write_text_file(dir + "/economics.csv", econ);
}

std::vector<LabelRow> load_labels(const std::string& path) {
  std::string text = read_text_file(path);
  std::istringstream in(text);
  CsvReader reader(in);
  std::vector<std::string> fields;
  if (!reader.next(fields) || fields != split_header(kLabelsHeader))
    raise(ErrorCode::Parse, path + ": bad header, expected " + std::string(kLabelsHeader));
  std::vector<LabelRow> out;
  while (reader.next(fields)) {
    if (fields.size() != 4) raise(ErrorCode::Parse, path + ": bad row arity");
    auto kind = parse_event_kind(fields[1]);
    auto ws = parse_i64(fields[2]);
    auto we = parse_i64(fields[3]);
    if (fields[0].empty() || !kind || !ws || !we || *we < *ws)
      raise(ErrorCode::Parse, path + ": bad label row for '" + fields[0] + "'");
    out.push_back({fields[0], *kind, *ws, *we});
  }
  return out;
}

void write_labels(const std::vector<LabelRow>& labels, const std::string& path) {
  std::string out = std::string(kLabelsHeader) + "\n";
  for (const auto& l : labels)
    out += csv_row({l.token_id, to_string(l.kind), fmt_i64(l.window_start), fmt_i64(l.window_end)});
  write_text_file(path, out);
}

}  // namespace mw
