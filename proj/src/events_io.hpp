#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "model.hpp"

namespace mw {

// Canonical JSON helpers shared by the events writer and the report writer.
// Output is deterministic byte-for-byte: keys are emitted in sorted order by
// the callers, numbers use one fixed formatting rule.
std::string json_escape(std::string_view s);  // includes the surrounding quotes

// Integral doubles (|v| small enough to be exact) print without a decimal
// point; everything else prints %.4f.  +/-infinity prints as +/-1e308 — JSON
// has no infinity literal, and 1e308 round-trips as a double.  NaN prints as
// null.
std::string json_num(double v);

// One event, one line, keys alphabetical:
// {"actors":[...],"kind":"...","metrics":{...},"token_id":"...",
//  "window_end":N,"window_start":N}
std::string event_to_json(const DetectionEvent& ev);

// Canonical event ordering used wherever events are serialized:
// (token_id, window_start, kind, window_end).  Sorting with this makes
// detection output independent of thread scheduling.
bool event_order(const DetectionEvent& a, const DetectionEvent& b);

void write_events_jsonl(const std::vector<DetectionEvent>& events, const std::string& path);

// Parses what write_events_jsonl wrote (tolerates any valid JSON object per
// line with the six fields).  Throws Error(Parse) on malformed lines.
std::vector<DetectionEvent> load_events_jsonl(const std::string& path);

}  // namespace mw
