#pragma once

#include <array>
#include <string_view>

namespace ocrqa {

struct Block;
struct Dictionary;
struct TrigramProfile;

// The four text features of one block, in extraction order.
struct FeatureVector {
  double dict_score = 0.0;        // x0: length-weighted dictionary hit ratio
  double trigram_score = 0.0;     // x1: tri-gram rank similarity
  double clean_token_ratio = 0.0; // x2: 1 - garbage token fraction
  int year = 0;                   // x3: publication year

  std::array<double, 4> as_array() const {
    return {dict_score, trigram_score, clean_token_ratio, static_cast<double>(year)};
  }
};

// x0: sum of |t| over dictionary tokens divided by sum of |t| over all
// tokens, so every token is weighted by its own length. Throws when the
// block has no tokens.
double dict_feature(const Block& block, const Dictionary& dict);

// x1: 1 - sum(min(gamma, rank(tri))) / (gamma * #trigrams). Blocks without
// tri-grams return 0 rather than erroring, so numeric or very short blocks
// still receive a full vector.
double trigram_feature(const Block& block, const TrigramProfile& profile);

// True when at least one of the nine surface-form rules fires:
//   1. at least twenty-one characters
//   2. three consecutive occurrences of the same character (case-insensitive)
//   3. four consecutive vowels
//   4. six consecutive consonants
//   5. a vowel and a consonant count, one more than eight times the other
//   6. a lower-case letter and strictly more upper-case letters
//   7. an upper-case letter, starting and ending with lower-case letters
//   8. an alphanumeric character and strictly more non-alphanumeric ones
//   9. two distinct non-alphanumeric characters, first and last excluded
bool is_garbage(std::string_view token);

// x2: 1 minus the fraction of garbage tokens. Throws when the block has no
// tokens.
double garbage_feature(const Block& block);

// x3: the publication year, unchanged; scaling happens in the model
// preprocessing. Throws when the block carries no year.
int year_feature(const Block& block);

// Assembles (x0, x1, x2, x3). The caller resolves the block language first;
// dict and profile must match it.
FeatureVector extract_features(const Block& block, const Dictionary& dict,
                               const TrigramProfile& profile);

}  // namespace ocrqa
