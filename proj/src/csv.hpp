#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mw {

// Minimal RFC-4180-ish CSV reader: quoted fields, embedded commas/quotes/
// newlines inside quotes, tolerant of CRLF.  Returns one record per call.
class CsvReader {
 public:
  explicit CsvReader(std::istream& in) : in_(in) {}

  // False at end of input.  Blank lines outside quotes are skipped.
  bool next(std::vector<std::string>& fields);

  std::int64_t line() const { return line_; }

 private:
  std::istream& in_;
  std::int64_t line_ = 0;
};

// Quote a field if it needs it, per RFC 4180.
std::string csv_escape(std::string_view field);

// Join + escape + newline.
std::string csv_row(const std::vector<std::string>& fields);

// Shortest round-trip decimal form (std::to_chars).  Data files use this so
// values survive a write/read cycle bit-exactly.  NaN -> empty string.
std::string fmt_double(double v);

// Fixed 4-decimal form for report files.  +inf -> "1e308" (JSON-safe
// sentinel, documented in the events format), -inf -> "-1e308".
std::string fmt_fixed4(double v);

std::string fmt_i64(std::int64_t v);

// Strict full-string parses; nullopt on any trailing garbage.
std::optional<double> parse_double(std::string_view s);
std::optional<std::int64_t> parse_i64(std::string_view s);
std::optional<std::uint64_t> parse_u64(std::string_view s);

// Whole-file helpers.
std::string read_text_file(const std::string& path);           // throws Error(Io)
void write_text_file(const std::string& path, std::string_view content);

}  // namespace mw
