#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "model.hpp"

namespace mw {

struct Dataset {
  std::map<std::string, TokenRecord> tokens;
  std::map<std::string, std::vector<OhlcvBar>> ohlcv;      // sorted, strictly increasing ts
  std::map<std::string, std::vector<Trade>> trades;        // sorted by ts (stable)
  std::map<std::string, std::vector<HolderSnapshot>> holders;
  std::map<std::string, std::vector<TokenEconomics>> economics;
};

struct LoadReport {
  std::int64_t rows_loaded = 0;
  std::int64_t rows_rejected = 0;
  std::map<std::string, std::int64_t> rejected_by_reason;
  std::map<std::string, std::int64_t> loaded_by_file;  // tokens/ohlcv/trades/holders/economics

  void reject(const std::string& reason) {
    ++rows_rejected;
    ++rejected_by_reason[reason];
  }
};

struct LoadPaths {
  std::string tokens;
  std::string ohlcv;
  std::string trades;
  std::string holders;
  std::string economics;  // optional; empty = absent
};

// Load + validate + normalize the five CSVs.
//
// File-level problems (missing file, wrong header) throw Error(Io/Parse).
// Row-level problems never throw: the row is dropped and counted in the
// report under a reason key.  Reason keys:
//   malformed-field     wrong arity or unparseable number/flag
//   bad-chain           unknown chain name
//   address-bad-length / address-bad-prefix / address-bad-charset /
//   address-bad-decode  chain-specific address validation
//   bad-created-at      created_at <= 0
//   duplicate-token     same token_id again (rows merge, see below)
//   ohlc-range          low/high do not bracket open/close
//   negative-value      negative price column or volume, negative/zero where positive required
//   ts-not-hour-aligned OHLCV ts % 3600 != 0
//   duplicate-ts        same (token, ts) bar; the last row in input order wins
//   bad-side            trade side not buy/sell
//   non-positive-amount trade amount_usd <= 0
//   share-out-of-range  holder share outside [0, 100]
//   marketcap-mismatch  |mcap - price*supply| > 1e-6 relative (all three present)
//   orphan-row          series row whose token_id is not in tokens.csv
//
// Duplicate token rows are not lost: sources union, created_at takes the
// minimum, first row wins the identity fields; the extra row still counts
// under duplicate-token so feeds with pathological duplication are visible.
//
// Series are sorted by ts on load.  Economics price/supply/mcap/liquidity
// fields may be empty (stored as NaN).
Dataset load_dataset(const LoadPaths& paths, LoadReport* report = nullptr);

// Write the normalized dataset back out as the same five CSVs (economics.csv
// always written, possibly header-only).  Deterministic: tokens sorted by
// id, series in ts order, shortest round-trip number formatting.
void write_dataset(const Dataset& ds, const std::string& dir);

// Convenience: load a directory produced by write_dataset / the generator.
Dataset load_dataset_dir(const std::string& dir, LoadReport* report = nullptr);

struct LabelRow {
  std::string token_id;
  EventKind kind = EventKind::WashZeroRisk;
  std::int64_t window_start = 0;
  std::int64_t window_end = 0;
};

// labels.csv: token_id,kind,window_start,window_end.  Strict: any bad row
// throws Error(Parse) — labels are ground truth, not a feed to be cleaned.
std::vector<LabelRow> load_labels(const std::string& path);
void write_labels(const std::vector<LabelRow>& labels, const std::string& path);

}  // namespace mw
