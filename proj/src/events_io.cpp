#include "events_io.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "csv.hpp"
#include "error.hpp"

namespace mw {

std::string json_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  out.push_back('"');
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out.push_back(c);
        }
    }
  }
  out.push_back('"');
  return out;
}

std::string json_num(double v) {
  if (std::isnan(v)) return "null";
  if (std::isinf(v)) return v > 0 ? "1e308" : "-1e308";
  if (v == std::floor(v) && std::fabs(v) <= 9e15) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(v));
    return buf;
  }
  char buf[512];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

std::string event_to_json(const DetectionEvent& ev) {
  std::string out = "{\"actors\":[";
  bool first = true;
  for (const auto& a : ev.actors) {
    if (!first) out.push_back(',');
    out += json_escape(a);
    first = false;
  }
  out += "],\"kind\":";
  out += json_escape(to_string(ev.kind));
  out += ",\"metrics\":{";
  first = true;
  for (const auto& [k, v] : ev.metrics) {
    if (!first) out.push_back(',');
    out += json_escape(k);
    out.push_back(':');
    out += json_num(v);
    first = false;
  }
  out += "},\"token_id\":";
  out += json_escape(ev.token_id);
  out += ",\"window_end\":" + std::to_string(ev.window_end);
  out += ",\"window_start\":" + std::to_string(ev.window_start);
  out.push_back('}');
  return out;
}

bool event_order(const DetectionEvent& a, const DetectionEvent& b) {
  if (a.token_id != b.token_id) return a.token_id < b.token_id;
  if (a.window_start != b.window_start) return a.window_start < b.window_start;
  if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  return a.window_end < b.window_end;
}

void write_events_jsonl(const std::vector<DetectionEvent>& events, const std::string& path) {
  std::string out;
  for (const auto& ev : events) {
    out += event_to_json(ev);
    out.push_back('\n');
  }
  write_text_file(path, out);
}

std::vector<DetectionEvent> load_events_jsonl(const std::string& path) {
  std::string text = read_text_file(path);
  std::istringstream in(text);
  std::vector<DetectionEvent> out;
  std::string line;
  std::int64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object())
      raise(ErrorCode::Parse, path + ":" + std::to_string(lineno) + ": bad JSON line");
    try {
      DetectionEvent ev;
      ev.token_id = j.at("token_id").get<std::string>();
      auto kind = parse_event_kind(j.at("kind").get<std::string>());
      if (!kind)
        raise(ErrorCode::Parse, path + ":" + std::to_string(lineno) + ": unknown event kind");
      ev.kind = *kind;
      ev.window_start = j.at("window_start").get<std::int64_t>();
      ev.window_end = j.at("window_end").get<std::int64_t>();
      if (j.contains("metrics"))
        for (auto it = j["metrics"].begin(); it != j["metrics"].end(); ++it)
          ev.metrics[it.key()] = it.value().is_null()
                                     ? std::numeric_limits<double>::quiet_NaN()
                                     : it.value().get<double>();
      if (j.contains("actors"))
        for (const auto& a : j["actors"]) ev.actors.insert(a.get<std::string>());
      out.push_back(std::move(ev));
    } catch (const nlohmann::json::exception& e) {
      raise(ErrorCode::Parse, path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace mw
