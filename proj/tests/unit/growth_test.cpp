#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "growth.hpp"

using namespace mw;
using doctest::Approx;

namespace {

DailyAggregate day_row(std::int64_t day, double close, double volume) {
  DailyAggregate d;
  d.day = day;
  d.open = close;
  d.close = close;
  d.volume_usd = volume;
  d.bar_count = 24;
  return d;
}

Trade trade(std::int64_t ts, const std::string& maker, Side side, double usd) {
  Trade t;
  t.ts = ts;
  t.maker_id = maker;
  t.side = side;
  t.amount_usd = usd;
  return t;
}

}  // namespace

TEST_CASE("wash screen: surge must exceed the threshold strictly") {
  Config cfg;
  // 1000 -> 6000 is exactly +500%: not screened
  CHECK(screen_wash_days({day_row(100, 1.0, 1000), day_row(101, 1.0, 6000)}, cfg).empty());
  // one dollar more crosses it
  auto hits = screen_wash_days({day_row(100, 1.0, 1000), day_row(101, 1.0, 6001)}, cfg);
  REQUIRE(hits.size() == 1);
  CHECK(hits[0].day == 101);
  CHECK(hits[0].volume_surge_pct == Approx(500.1).epsilon(1e-12));
  CHECK(hits[0].price_change_pct == 0.0);
}

TEST_CASE("wash screen: price move must stay strictly inside the band") {
  Config cfg;
  // exactly +5% close move: not screened
  CHECK(screen_wash_days({day_row(0, 1.0, 1000), day_row(1, 1.05, 7000)}, cfg).empty());
  // 4.9% passes, and the band is symmetric
  CHECK(screen_wash_days({day_row(0, 1.0, 1000), day_row(1, 1.049, 7000)}, cfg).size() == 1);
  CHECK(screen_wash_days({day_row(0, 1.0, 1000), day_row(1, 0.9505, 7000)}, cfg).size() == 1);
}

TEST_CASE("wash screen: a zero-volume baseline day screens as an infinite surge") {
  Config cfg;
  auto hits = screen_wash_days({day_row(0, 1.0, 0), day_row(1, 1.0, 5000)}, cfg);
  REQUIRE(hits.size() == 1);
  CHECK(std::isinf(hits[0].volume_surge_pct));
  // 0 -> 0 is a 0% surge, not screened
  CHECK(screen_wash_days({day_row(0, 1.0, 0), day_row(1, 1.0, 0)}, cfg).empty());
  // the first day has no baseline
  CHECK(screen_wash_days({day_row(0, 1.0, 1e9)}, cfg).empty());
}

TEST_CASE("wash confirmation: zero-risk and circular makers on one day, persistence across days") {
  Config cfg;
  std::vector<DailyAggregate> daily = {day_row(10, 1.0, 100), day_row(11, 1.0, 1000),
                                       day_row(12, 1.0, 10000)};
  const std::int64_t d11 = day_start(11), d12 = day_start(12);
  std::vector<Trade> trades = {
      // day 11: two makers, both flat books, all volume both-sided
      trade(d11 + 10, "wa", Side::Buy, 500), trade(d11 + 20, "wa", Side::Sell, 495),
      trade(d11 + 30, "wb", Side::Buy, 2.5), trade(d11 + 40, "wb", Side::Sell, 2.5),
      // day 12: lopsided maker plus a one-sided buyer: nothing confirms
      trade(d12 + 10, "wa", Side::Buy, 5000), trade(d12 + 20, "wa", Side::Sell, 4000),
      trade(d12 + 30, "solo", Side::Buy, 1000),
  };
  auto out = detect_wash_trading("tok", daily, trades, cfg);
  CHECK(out.screened_days == 2);
  CHECK(out.unconfirmed_days == 1);
  REQUIRE(out.events.size() == 3);

  const DetectionEvent& zr = out.events[0];
  CHECK(zr.kind == EventKind::WashZeroRisk);
  CHECK(zr.window_start == d11);
  CHECK(zr.window_end == d11 + 86399);
  CHECK(zr.metrics.at("zero_risk_makers") == 2);
  CHECK(zr.metrics.at("volume_surge_pct") == Approx(900.0).epsilon(1e-12));
  CHECK(zr.actors == std::set<std::string>{"wa", "wb"});

  const DetectionEvent& circ = out.events[1];
  CHECK(circ.kind == EventKind::WashCircular);
  CHECK(circ.metrics.at("circular_ratio") == 1.0);
  CHECK(circ.metrics.at("unique_makers") == 2);

  const DetectionEvent& pers = out.events[2];
  CHECK(pers.kind == EventKind::WashPersistent);
  CHECK(pers.window_start == d11);
  CHECK(pers.window_end == d12 + 86399);
  CHECK(pers.metrics.at("screened_days") == 2);
  CHECK(pers.metrics.at("persistent_makers") == 1);
  CHECK(pers.actors == std::set<std::string>{"wa"});  // wb and solo miss a day
}

TEST_CASE("zero-risk tolerance boundary is inclusive at 0.02") {
  Config cfg;
  std::vector<DailyAggregate> daily = {day_row(20, 1.0, 100), day_row(21, 1.0, 2000)};
  const std::int64_t d = day_start(21);
  std::vector<Trade> trades = {
      trade(d + 1, "m1", Side::Buy, 100), trade(d + 2, "m1", Side::Sell, 98),     // 0.0200
      trade(d + 3, "m2", Side::Buy, 100), trade(d + 4, "m2", Side::Sell, 97.99),  // 0.0201
  };
  auto out = detect_wash_trading("tok", daily, trades, cfg);
  REQUIRE(!out.events.empty());
  CHECK(out.events[0].kind == EventKind::WashZeroRisk);
  CHECK(out.events[0].metrics.at("zero_risk_makers") == 1);
  CHECK(out.events[0].actors == std::set<std::string>{"m1"});
}

TEST_CASE("circular ratio boundary is inclusive at 0.99") {
  Config cfg;
  std::vector<DailyAggregate> daily = {day_row(20, 1.0, 100), day_row(21, 1.0, 2000)};
  const std::int64_t d = day_start(21);
  // both-sided maker carries exactly 99% of day trade volume, and is NOT
  // zero-risk, so the circular path is the only confirmation
  std::vector<Trade> at_boundary = {
      trade(d + 1, "c", Side::Buy, 6000), trade(d + 2, "c", Side::Sell, 3900),
      trade(d + 3, "o", Side::Buy, 100),
  };
  auto hit = detect_wash_trading("tok", daily, at_boundary, cfg);
  REQUIRE(hit.events.size() == 1);
  CHECK(hit.events[0].kind == EventKind::WashCircular);
  CHECK(hit.events[0].metrics.at("circular_ratio") == Approx(0.99).epsilon(1e-12));
  CHECK(hit.events[0].actors == std::set<std::string>{"c"});

  std::vector<Trade> below = {
      trade(d + 1, "c", Side::Buy, 6000), trade(d + 2, "c", Side::Sell, 3899),
      trade(d + 3, "o", Side::Buy, 101),
  };
  auto miss = detect_wash_trading("tok", daily, below, cfg);
  CHECK(miss.events.empty());
  CHECK(miss.unconfirmed_days == 1);
}

TEST_CASE("a single screened day never yields a persistence event") {
  Config cfg;
  std::vector<DailyAggregate> daily = {day_row(20, 1.0, 100), day_row(21, 1.0, 2000)};
  const std::int64_t d = day_start(21);
  std::vector<Trade> trades = {trade(d + 1, "m", Side::Buy, 50), trade(d + 2, "m", Side::Sell, 50)};
  auto out = detect_wash_trading("tok", daily, trades, cfg);
  for (const auto& ev : out.events) CHECK(ev.kind != EventKind::WashPersistent);
}

TEST_CASE("lpi phase 1: strict price gate and the volume OR branch") {
  Config cfg;
  const std::int64_t d = day_start(31);
  std::vector<Trade> buys = {trade(d + 1, "a", Side::Buy, 400), trade(d + 2, "b", Side::Buy, 100)};

  // exactly +100% is not enough
  auto out = detect_lpi("tok", {day_row(30, 0.001, 500), day_row(31, 0.002, 550)}, buys, cfg);
  CHECK(out.phase1_days == 0);
  CHECK(out.events.empty());

  // +110% with stagnant volume (+10% <= 20%)
  out = detect_lpi("tok", {day_row(30, 0.001, 500), day_row(31, 0.0021, 550)}, buys, cfg);
  CHECK(out.phase1_days == 1);
  REQUIRE(out.events.size() == 1);
  const DetectionEvent& ev = out.events[0];
  CHECK(ev.kind == EventKind::Lpi);
  CHECK(ev.window_start == d);
  CHECK(ev.window_end == d + 86399);
  CHECK(ev.metrics.at("price_change_pct") == Approx(110.0).epsilon(1e-9));
  CHECK(ev.metrics.at("volume_usd") == 550);
  CHECK(ev.metrics.at("buy_ratio") == 1.0);
  CHECK(ev.metrics.at("unique_makers") == 2);
  CHECK(ev.actors == std::set<std::string>{"a", "b"});

  // volume explodes (+800%) but stays under the low-volume floor: still phase 1
  out = detect_lpi("tok", {day_row(30, 0.001, 100), day_row(31, 0.0025, 900)}, buys, cfg);
  CHECK(out.phase1_days == 1);
  CHECK(out.events.size() == 1);

  // volume explodes above the floor: not phase 1
  out = detect_lpi("tok", {day_row(30, 0.001, 1000), day_row(31, 0.0025, 2000)}, buys, cfg);
  CHECK(out.phase1_days == 0);
}

TEST_CASE("lpi phase 2: buy ratio and maker-count boundaries") {
  Config cfg;
  std::vector<DailyAggregate> daily = {day_row(30, 0.001, 500), day_row(31, 0.0021, 550)};
  const std::int64_t d = day_start(31);

  // buy ratio exactly 0.90 confirms
  std::vector<Trade> ninety = {trade(d + 1, "a", Side::Buy, 900), trade(d + 2, "a", Side::Sell, 100)};
  auto out = detect_lpi("tok", daily, ninety, cfg);
  CHECK(out.events.size() == 1);
  CHECK(out.events[0].metrics.at("buy_ratio") == Approx(0.90).epsilon(1e-12));

  // a hair under does not
  std::vector<Trade> under = {trade(d + 1, "a", Side::Buy, 890), trade(d + 2, "a", Side::Sell, 110)};
  out = detect_lpi("tok", daily, under, cfg);
  CHECK(out.events.empty());
  CHECK(out.unconfirmed_days == 1);

  // 10 unique makers pass, 11 fail
  std::vector<Trade> ten, eleven;
  for (int i = 0; i < 10; ++i) ten.push_back(trade(d + 1 + i, "m" + std::to_string(i), Side::Buy, 10));
  for (int i = 0; i < 11; ++i)
    eleven.push_back(trade(d + 1 + i, "m" + std::to_string(i), Side::Buy, 10));
  CHECK(detect_lpi("tok", daily, ten, cfg).events.size() == 1);
  CHECK(detect_lpi("tok", daily, eleven, cfg).events.empty());

  // a phase-1 day without any trades stays unconfirmed
  out = detect_lpi("tok", daily, {}, cfg);
  CHECK(out.phase1_days == 1);
  CHECK(out.unconfirmed_days == 1);
  CHECK(out.events.empty());
}

TEST_CASE("holder anomalies: strict thresholds, one event per rule per snapshot") {
  Config cfg;
  HolderSnapshot s1{1000, 30.0, 30.1, 15, 5, false};   // top10 at the threshold: no event
  HolderSnapshot s2{2000, 55, 0, 31, 99, true};
  HolderSnapshot s3{3000, 1, 1, 1, 1, false};
  auto events = detect_holder_anomalies("tok", {s1, s2, s3}, cfg);
  REQUIRE(events.size() == 5);

  CHECK(events[0].kind == EventKind::AnomalyBundle);
  CHECK(events[0].window_start == 1000);
  CHECK(events[0].window_end == 1000);
  CHECK(events[0].metrics.at("bundle_buy_share") == 30.1);

  CHECK(events[1].kind == EventKind::AnomalyTopHolders);
  CHECK(events[1].metrics.at("top10_share") == 55);
  CHECK(events[2].kind == EventKind::AnomalyFresh);
  CHECK(events[3].kind == EventKind::AnomalyAirdrop);
  CHECK(events[4].kind == EventKind::AnomalyHoneypot);
  CHECK(events[4].metrics.at("honeypot") == 1.0);
  CHECK(events[4].window_start == 2000);
}
