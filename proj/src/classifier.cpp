#include "classifier.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "csv.hpp"
#include "error.hpp"

namespace mw {

std::vector<std::string> preprocess_name(std::string_view name) {
  std::vector<std::string> words;
  std::string cur;
  for (char c : name) {
    unsigned char u = static_cast<unsigned char>(c);
    if (u >= 'A' && u <= 'Z') {
      cur.push_back(static_cast<char>(u - 'A' + 'a'));
    } else if ((u >= 'a' && u <= 'z') || (u >= '0' && u <= '9')) {
      cur.push_back(static_cast<char>(u));
    } else {
      if (!cur.empty()) words.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) words.push_back(std::move(cur));
  return words;
}

std::vector<ScoredWord> tfidf_rank(const std::vector<std::string>& corpus) {
  if (corpus.empty()) raise(ErrorCode::InvalidArgument, "empty corpus");
  const double n_docs = static_cast<double>(corpus.size());
  std::unordered_map<std::string, std::int64_t> total_count;
  std::unordered_map<std::string, std::int64_t> doc_count;
  std::set<std::string> seen_this_doc;
  for (const auto& doc : corpus) {
    seen_this_doc.clear();
    for (auto& w : preprocess_name(doc)) {
      ++total_count[w];
      if (seen_this_doc.insert(w).second) ++doc_count[w];
    }
  }
  std::vector<ScoredWord> out;
  out.reserve(total_count.size());
  for (const auto& [word, count] : total_count) {
    double idf = std::log(n_docs / static_cast<double>(doc_count[word]));
    out.push_back({word, static_cast<double>(count) * idf});
  }
  std::sort(out.begin(), out.end(), [](const ScoredWord& a, const ScoredWord& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.word < b.word;
  });
  return out;
}

std::size_t elbow_cutoff(const std::vector<double>& scores) {
  const std::size_t n = scores.size();
  if (n < 3) raise(ErrorCode::InvalidArgument, "elbow needs at least 3 points");
  // chord from (1, s_1) to (n, s_n); maximize perpendicular distance.  The
  // denominator of the point-line distance is constant, so compare the
  // numerator |a*i + b*s_i + c| only.
  const double x1 = 1, y1 = scores.front();
  const double x2 = static_cast<double>(n), y2 = scores.back();
  const double a = y2 - y1;
  const double b = x1 - x2;
  const double c = x2 * y1 - x1 * y2;
  std::size_t best_k = 1;
  double best_d = -1;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = static_cast<double>(i + 1);
    const double d = std::fabs(a * x + b * scores[i] + c);
    if (d > best_d) {  // strict: ties keep the earlier (smaller) index
      best_d = d;
      best_k = i + 1;
    }
  }
  return best_k;
}

KeywordModel build_keyword_model(const std::vector<std::string>& corpus,
                                 const std::set<std::string>& stoplist,
                                 std::size_t cutoff) {
  std::vector<ScoredWord> ranked = tfidf_rank(corpus);
  if (ranked.empty()) raise(ErrorCode::InvalidArgument, "corpus produced no words");

  std::size_t k_raw;
  if (cutoff > 0) {
    k_raw = std::min(cutoff, ranked.size());
  } else {
    std::vector<double> scores;
    scores.reserve(ranked.size());
    for (const auto& sw : ranked) scores.push_back(sw.score);
    k_raw = elbow_cutoff(scores);
  }

  KeywordModel model;
  model.stoplist = stoplist;
  model.cutoff_k = 0;
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    if (stoplist.count(ranked[i].word)) continue;
    if (i < k_raw) ++model.cutoff_k;
    model.keywords.push_back(ranked[i]);
  }
  if (model.cutoff_k == 0)
    raise(ErrorCode::InvalidArgument, "stoplist eliminates every keyword above the cutoff");
  for (std::size_t i = 0; i < model.cutoff_k; ++i) model.active.insert(model.keywords[i].word);
  return model;
}

bool classify_name(const KeywordModel& model, std::string_view name) {
  if (model.cutoff_k == 0) raise(ErrorCode::InvalidArgument, "model has no active keywords");
  for (const auto& w : preprocess_name(name))
    if (model.active.count(w)) return true;
  return false;
}

bool is_pumpfun_address(std::string_view address) {
  return address.size() >= 4 && address.substr(address.size() - 4) == "pump";
}

void write_model_csv(const KeywordModel& model, const std::string& path) {
  std::string out = "rank,word,score\n";
  for (std::size_t i = 0; i < model.keywords.size(); ++i)
    out += csv_row({fmt_i64(static_cast<std::int64_t>(i + 1)), model.keywords[i].word,
                    fmt_double(model.keywords[i].score)});
  write_text_file(path, out);
}

KeywordModel load_model_csv(const std::string& path) {
  std::string text = read_text_file(path);
  std::istringstream in(text);
  CsvReader reader(in);
  std::vector<std::string> fields;
  if (!reader.next(fields) || fields != std::vector<std::string>{"rank", "word", "score"})
    raise(ErrorCode::Parse, path + ": expected header rank,word,score");
  KeywordModel model;
  while (reader.next(fields)) {
    if (fields.size() != 3) raise(ErrorCode::Parse, path + ": bad row arity");
    auto score = parse_double(fields[2]);
    if (!score) raise(ErrorCode::Parse, path + ": bad score '" + fields[2] + "'");
    model.keywords.push_back({fields[1], *score});
  }
  if (model.keywords.empty()) raise(ErrorCode::Parse, path + ": empty model");
  // A persisted model has no recorded cutoff; treat the whole list as
  // active.  Builders that want the elbow keep the in-memory model.
  model.cutoff_k = model.keywords.size();
  for (const auto& sw : model.keywords) model.active.insert(sw.word);
  return model;
}

std::set<std::string> load_stoplist(const std::string& path) {
  std::string text = read_text_file(path);
  std::istringstream in(text);
  std::set<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    line = line.substr(start);
    if (line.empty() || line[0] == '#') continue;
    for (auto& ch : line)
      if (ch >= 'A' && ch <= 'Z') ch = static_cast<char>(ch - 'A' + 'a');
    out.insert(line);
  }
  return out;
}

std::vector<std::string> load_corpus(const std::string& path) {
  std::string text = read_text_file(path);
  std::istringstream in(text);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(line);
  }
  return out;
}

namespace {

bool name_has_nonmeme_marker(std::string_view name) {
  std::string lowered;
  lowered.reserve(name.size());
  for (char c : name)
    lowered.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c);
  return lowered.find("usd") != std::string::npos ||
         lowered.find("wrapped") != std::string::npos ||
         lowered.find("staked") != std::string::npos;
}

}  // namespace

RefineOutcome refine_classified(const std::vector<TokenRecord>& tokens,
                                const std::map<std::string, std::vector<TokenEconomics>>& economics,
                                const std::set<std::string>& stablecoin_ids,
                                const std::set<std::string>& nonmeme_tagged_ids,
                                double max_price_usd, double min_market_cap_usd) {
  RefineOutcome out;
  for (const auto& tok : tokens) {
    int stage = 0;
    if (stablecoin_ids.count(tok.token_id)) {
      stage = 1;
    } else if (nonmeme_tagged_ids.count(tok.token_id)) {
      auto it = economics.find(tok.token_id);
      if (it != economics.end() && !it->second.empty()) {
        const TokenEconomics& latest = it->second.back();
        double mcap = latest.market_cap_usd;
        if (std::isnan(mcap)) mcap = market_cap(latest.price_usd, latest.circulating_supply);
        bool pricey = !std::isnan(latest.price_usd) && latest.price_usd > max_price_usd;
        bool large = !std::isnan(mcap) && mcap > min_market_cap_usd;
        if (pricey || large) stage = 2;
      }
    }
    if (stage == 0 && name_has_nonmeme_marker(tok.name)) stage = 3;
    if (stage == 0)
      out.kept.push_back(tok.token_id);
    else
      out.removed.emplace_back(tok.token_id, stage);
  }
  return out;
}

}  // namespace mw
