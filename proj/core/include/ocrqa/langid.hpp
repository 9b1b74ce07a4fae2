#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace ocrqa {

struct Block;

// Rank table of character n-grams (n = 1..5) for one language, most frequent
// first. Used with the out-of-place distance for fallback language detection.
struct LanguageProfile {
  std::string lang;
  std::vector<std::string> ngrams;               // index == rank
  std::unordered_map<std::string, int> rank_of;  // derived from ngrams
  int max_rank = 0;                              // truncation cap given at build time
};

// Lowercased letter n-grams of length 1..5, ranked by descending frequency
// (ties lexicographic), truncated to max_rank entries. Throws if the corpus
// contains no letters.
LanguageProfile build_language_profile(std::string_view corpus_text, std::string lang,
                                       int max_rank);

// Cavnar-style out-of-place measure: sum over doc n-grams of
// |rank_doc - rank_ref|, where missing n-grams cost ref.max_rank.
long long profile_distance(const LanguageProfile& doc, const LanguageProfile& ref);

// Header line "lang max_rank", then one "ngram TAB rank" per line.
void save_language_profile(std::ostream& out, const LanguageProfile& profile);
LanguageProfile load_language_profile(std::istream& in);

struct StopwordList {
  std::string lang = "lb";
  std::unordered_set<std::string> words;  // lowercase tokens
  double hit_threshold = 0.15;            // fraction of tokens that must hit
};

// One token per line. Throws on an empty list.
StopwordList load_stopwords(std::istream& in, std::string lang = "lb",
                            double hit_threshold = 0.15);

// Compiled-in Luxembourgish function words, for use without resource files.
const StopwordList& builtin_lb_stopwords();

struct DetectorConfig {
  int doc_max_rank = 400;       // cap for the per-block profile
  double abstain_ceiling = 0.8; // of (doc profile size * ref.max_rank)
};

// Stop-word screen first (lb), then nearest profile by out-of-place distance.
// Returns nullopt (abstain) for blocks with no tokens, no letter n-grams, or
// when the best distance exceeds the ceiling.
std::optional<std::string> detect_language(const Block& block, const StopwordList& stops,
                                           const std::vector<LanguageProfile>& profiles,
                                           const DetectorConfig& config = {});

}  // namespace ocrqa
