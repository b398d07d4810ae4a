#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "csv.hpp"
#include "error.hpp"
#include "temp_dir.hpp"

using namespace mw;

namespace {
std::vector<std::vector<std::string>> read_all(const std::string& text) {
  std::istringstream in(text);
  CsvReader reader(in);
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  while (reader.next(row)) rows.push_back(row);
  return rows;
}
}  // namespace

TEST_CASE("csv reader handles quoting, CRLF and blank lines") {
  auto rows = read_all("a,b,c\r\n\"x,y\",\"he said \"\"hi\"\"\",\"multi\nline\"\n\n1,,3\n");
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == std::vector<std::string>{"a", "b", "c"});
  CHECK(rows[1] == std::vector<std::string>{"x,y", "he said \"hi\"", "multi\nline"});
  CHECK(rows[2] == std::vector<std::string>{"1", "", "3"});
}

TEST_CASE("csv reader: last line without newline still yields a record") {
  auto rows = read_all("a,b");
  REQUIRE(rows.size() == 1);
  CHECK(rows[0] == std::vector<std::string>{"a", "b"});
}

TEST_CASE("csv reader rejects an unterminated quote") {
  std::istringstream in("\"oops");
  CsvReader reader(in);
  std::vector<std::string> row;
  CHECK_THROWS_AS(reader.next(row), Error);
}

TEST_CASE("csv_escape quotes only when needed") {
  CHECK(csv_escape("plain") == "plain");
  CHECK(csv_escape("with,comma") == "\"with,comma\"");
  CHECK(csv_escape("with\"quote") == "\"with\"\"quote\"");
  CHECK(csv_escape("with\nnewline") == "\"with\nnewline\"");
}

TEST_CASE("csv_row escapes and terminates") {
  CHECK(csv_row({"a", "b,c", ""}) == "a,\"b,c\",\n");
}

TEST_CASE("fmt_double round trips exactly") {
  for (double v : {0.0, 1.0, -1.5, 0.1, 1e-20, 6.62607015e-34, 1.7976931348623157e308,
                   123456789.123456789, 5e-324}) {
    auto back = parse_double(fmt_double(v));
    REQUIRE(back.has_value());
    CHECK(*back == v);
  }
  CHECK(fmt_double(std::nan("")) == "");
  CHECK(fmt_double(std::numeric_limits<double>::infinity()) == "1e308");
  CHECK(fmt_double(-std::numeric_limits<double>::infinity()) == "-1e308");
}

TEST_CASE("fmt_fixed4 formatting") {
  CHECK(fmt_fixed4(82.60254) == "82.6025");
  CHECK(fmt_fixed4(-0.5) == "-0.5000");
  CHECK(fmt_fixed4(0) == "0.0000");
  CHECK(fmt_fixed4(std::nan("")) == "");
}

TEST_CASE("strict numeric parsing") {
  CHECK(*parse_double("1.5e3") == 1500.0);
  CHECK(!parse_double("1.5x"));
  CHECK(!parse_double(" 1.5"));
  CHECK(!parse_double(""));
  CHECK(*parse_i64("-42") == -42);
  CHECK(!parse_i64("42.0"));
  CHECK(!parse_i64(""));
  CHECK(*parse_u64("42") == 42);
  CHECK(!parse_u64("-42"));
}

TEST_CASE("file helpers round trip and raise on missing files") {
  TempDir dir("csv");
  write_text_file(dir.file("x.txt"), "hello\n");
  CHECK(read_text_file(dir.file("x.txt")) == "hello\n");
  CHECK_THROWS_AS(read_text_file(dir.file("absent.txt")), Error);
}
