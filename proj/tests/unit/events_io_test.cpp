#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "csv.hpp"
#include "error.hpp"
#include "events_io.hpp"
#include "temp_dir.hpp"

using namespace mw;

TEST_CASE("json_escape quotes and escapes") {
  CHECK(json_escape("plain") == "\"plain\"");
  CHECK(json_escape("say \"hi\"") == "\"say \\\"hi\\\"\"");
  CHECK(json_escape("back\\slash") == "\"back\\\\slash\"");
  CHECK(json_escape("line\nbreak\ttab\rcr") == "\"line\\nbreak\\ttab\\rcr\"");
  CHECK(json_escape(std::string(1, '\x01')) == "\"\\u0001\"");
  CHECK(json_escape("") == "\"\"");
}

TEST_CASE("json_num formatting rules") {
  CHECK(json_num(0) == "0");
  CHECK(json_num(-3) == "-3");
  CHECK(json_num(1700006400) == "1700006400");
  CHECK(json_num(9e15) == "9000000000000000");
  CHECK(json_num(1e16) == "10000000000000000.0000");  // too big to trust as integral
  CHECK(json_num(2.5) == "2.5000");
  CHECK(json_num(-99.5) == "-99.5000");
  CHECK(json_num(82.60254) == "82.6025");
  CHECK(json_num(std::nan("")) == "null");
  CHECK(json_num(std::numeric_limits<double>::infinity()) == "1e308");
  CHECK(json_num(-std::numeric_limits<double>::infinity()) == "-1e308");
}

TEST_CASE("event_to_json emits sorted keys on one line") {
  DetectionEvent ev;
  ev.token_id = "t0001";
  ev.kind = EventKind::WashCircular;
  ev.window_start = 86400;
  ev.window_end = 172799;
  ev.metrics["circular_ratio"] = 0.995;
  ev.metrics["unique_makers"] = 3;
  ev.actors = {"m2", "m1"};
  CHECK(event_to_json(ev) ==
        "{\"actors\":[\"m1\",\"m2\"],\"kind\":\"WashCircular\","
        "\"metrics\":{\"circular_ratio\":0.9950,\"unique_makers\":3},"
        "\"token_id\":\"t0001\",\"window_end\":172799,\"window_start\":86400}");

  DetectionEvent bare;
  bare.token_id = "t";
  bare.kind = EventKind::Lpi;
  bare.window_start = 0;
  bare.window_end = 0;
  CHECK(event_to_json(bare) ==
        "{\"actors\":[],\"kind\":\"Lpi\",\"metrics\":{},\"token_id\":\"t\","
        "\"window_end\":0,\"window_start\":0}");
}

TEST_CASE("event_order sorts by token, start, kind, end") {
  auto mk = [](const std::string& tok, EventKind k, std::int64_t ws, std::int64_t we) {
    DetectionEvent e;
    e.token_id = tok;
    e.kind = k;
    e.window_start = ws;
    e.window_end = we;
    return e;
  };
  std::vector<DetectionEvent> events = {
      mk("b", EventKind::Lpi, 0, 0),
      mk("a", EventKind::RugPull, 50, 60),
      mk("a", EventKind::WashZeroRisk, 10, 20),
      mk("a", EventKind::WashCircular, 10, 20),
      mk("a", EventKind::WashCircular, 10, 15),
  };
  std::sort(events.begin(), events.end(), event_order);
  CHECK(events[0].token_id == "a");
  CHECK(events[0].kind == EventKind::WashZeroRisk);  // enum order within same start
  CHECK(events[1].kind == EventKind::WashCircular);
  CHECK(events[1].window_end == 15);
  CHECK(events[2].window_end == 20);
  CHECK(events[3].kind == EventKind::RugPull);
  CHECK(events[4].token_id == "b");
}

TEST_CASE("events jsonl round trip preserves everything") {
  TempDir dir("ev");
  DetectionEvent a;
  a.token_id = "t0001";
  a.kind = EventKind::PumpAndDump;
  a.window_start = 1700006400;
  a.window_end = 1700092800;
  a.metrics["pump_pct"] = 212.5;
  a.metrics["surge"] = std::numeric_limits<double>::infinity();
  a.metrics["missing"] = std::nan("");
  DetectionEvent b;
  b.token_id = "t0002";
  b.kind = EventKind::AnomalyHoneypot;
  b.window_start = 1000;
  b.window_end = 1000;
  b.metrics["honeypot"] = 1.0;
  b.actors = {"deployer"};

  write_events_jsonl({a, b}, dir.file("events.jsonl"));
  auto back = load_events_jsonl(dir.file("events.jsonl"));
  REQUIRE(back.size() == 2);
  CHECK(back[0].token_id == "t0001");
  CHECK(back[0].kind == EventKind::PumpAndDump);
  CHECK(back[0].window_start == 1700006400);
  CHECK(back[0].window_end == 1700092800);
  CHECK(back[0].metrics.at("pump_pct") == 212.5);
  CHECK(back[0].metrics.at("surge") == 1e308);       // infinity sentinel round-trips as 1e308
  CHECK(std::isnan(back[0].metrics.at("missing")));  // null -> NaN
  CHECK(back[1].actors == std::set<std::string>{"deployer"});
  CHECK(back[1].metrics.at("honeypot") == 1.0);

  // writing the reloaded events again is byte-identical except for the
  // clamped infinity, so compare a second full cycle instead
  write_events_jsonl(back, dir.file("events2.jsonl"));
  auto again = load_events_jsonl(dir.file("events2.jsonl"));
  write_events_jsonl(again, dir.file("events3.jsonl"));
  CHECK(read_text_file(dir.file("events2.jsonl")) == read_text_file(dir.file("events3.jsonl")));
}

TEST_CASE("load_events_jsonl rejects malformed lines with a line number") {
  TempDir dir("ev");
  write_text_file(dir.file("bad.jsonl"), "{\"kind\":\"Lpi\"}\n");
  CHECK_THROWS_AS(load_events_jsonl(dir.file("bad.jsonl")), Error);

  write_text_file(dir.file("garbage.jsonl"), "not json at all\n");
  try {
    load_events_jsonl(dir.file("garbage.jsonl"));
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
    CHECK(std::string(e.what()).find(":1:") != std::string::npos);
  }

  write_text_file(dir.file("badkind.jsonl"),
                  "{\"actors\":[],\"kind\":\"NotAKind\",\"metrics\":{},\"token_id\":\"t\","
                  "\"window_end\":0,\"window_start\":0}\n");
  CHECK_THROWS_AS(load_events_jsonl(dir.file("badkind.jsonl")), Error);

  // blank lines are tolerated
  write_text_file(dir.file("blank.jsonl"),
                  "\n{\"actors\":[],\"kind\":\"Lpi\",\"metrics\":{},\"token_id\":\"t\","
                  "\"window_end\":1,\"window_start\":0}\n\n");
  CHECK(load_events_jsonl(dir.file("blank.jsonl")).size() == 1);
}
