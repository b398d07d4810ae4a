#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "model.hpp"

namespace mw {

// Lowercase a token name and split on anything that is not [a-z0-9].
// ASCII-only on purpose: exotic unicode in names becomes separators, which
// matches how the keyword corpus was tokenized.
std::vector<std::string> preprocess_name(std::string_view name);

struct ScoredWord {
  std::string word;
  double score = 0;
};

// Corpus-level TF-IDF: score(w) = sum over documents of tf(w, d) * idf(w)
// with tf = raw count and idf = ln(N / df).  Sorted by score descending,
// ties alphabetical.  Words appearing in every document score 0 but are
// still ranked.
std::vector<ScoredWord> tfidf_rank(const std::vector<std::string>& corpus);

// Elbow of a non-increasing score curve: the 1-based index with maximum
// perpendicular distance to the chord from (1, s_1) to (n, s_n); ties go to
// the smaller index.  Needs at least 3 points.
std::size_t elbow_cutoff(const std::vector<double>& scores);

struct KeywordModel {
  std::vector<ScoredWord> keywords;  // ranked, stoplist words removed
  std::size_t cutoff_k = 0;          // keywords[0..cutoff_k) are active
  std::set<std::string> stoplist;
  std::set<std::string> active;      // the first cutoff_k words, for lookup
};

// cutoff == 0 selects the elbow automatically.  The cutoff is chosen on the
// raw ranking first, then stoplist words inside the kept prefix are dropped,
// so a stoplist never promotes lower-ranked words into the active set.
// Raises Error(InvalidArgument) if the corpus is empty, too short for the
// elbow, or if the stoplist eliminates every kept keyword.
KeywordModel build_keyword_model(const std::vector<std::string>& corpus,
                                 const std::set<std::string>& stoplist,
                                 std::size_t cutoff = 0);

// True when any preprocessed word of `name` is an active keyword.
bool classify_name(const KeywordModel& model, std::string_view name);

// Launchpad-minted tokens carry a recognizable address suffix.
bool is_pumpfun_address(std::string_view address);

// model CSV: header rank,word,score; 1-based rank; score via fmt_double.
void write_model_csv(const KeywordModel& model, const std::string& path);
KeywordModel load_model_csv(const std::string& path);

// One entry per line, '#' comments and blank lines skipped, lowercased.
std::set<std::string> load_stoplist(const std::string& path);
// One token name per line (blank lines skipped, no comment syntax: '#' can
// legitimately appear in a name).
std::vector<std::string> load_corpus(const std::string& path);

struct RefineOutcome {
  std::vector<std::string> kept;                      // token ids, input order
  std::vector<std::pair<std::string, int>> removed;   // token id -> stage 1..3
};

// False-positive refinement over classifier hits, first matching stage wins:
//   1. known stablecoin ids
//   2. tokens tagged non-meme upstream whose latest economics row shows
//      price > max_price_usd or market cap > min_market_cap_usd
//   3. names containing "usd", "wrapped", or "staked" as substrings
// kept + removed partition the input.
RefineOutcome refine_classified(const std::vector<TokenRecord>& tokens,
                                const std::map<std::string, std::vector<TokenEconomics>>& economics,
                                const std::set<std::string>& stablecoin_ids,
                                const std::set<std::string>& nonmeme_tagged_ids,
                                double max_price_usd, double min_market_cap_usd);

}  // namespace mw
