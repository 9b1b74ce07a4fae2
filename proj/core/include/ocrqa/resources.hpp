#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace ocrqa {

// Per-language token set. Lookups are case-insensitive and ignore leading and
// trailing non-letter characters, so punctuation-adjacent words still map.
struct Dictionary {
  std::string lang;
  std::unordered_set<std::string> entries;  // lowercase

  bool contains(std::string_view token) const;
};

// One token per line. Throws on an empty file.
Dictionary load_dictionary(std::istream& in, std::string lang);

// Every contiguous 3-letter window within each maximal letter run of the
// lowercased token, duplicates kept. Runs shorter than 3 emit nothing.
std::vector<std::string> extract_trigrams(std::string_view token);

// Top-gamma tri-gram rank table of one language, ranks 0-based.
struct TrigramProfile {
  std::string lang;
  int gamma = 1000;
  std::unordered_map<std::string, int> rank_of;

  // Rank of a tri-gram; absent tri-grams rank as gamma.
  int rank(const std::string& trigram) const;
};

// Counts tri-grams over all tokens of the corpus, ranks by descending
// frequency (ties lexicographic), keeps the top gamma. Throws when the
// corpus yields no tri-grams.
TrigramProfile build_trigram_profile(std::string_view corpus_text, std::string lang, int gamma);

// Header line "lang gamma", then one "tri TAB rank" per line.
void save_trigram_profile(std::ostream& out, const TrigramProfile& profile);
TrigramProfile load_trigram_profile(std::istream& in);

}  // namespace ocrqa
