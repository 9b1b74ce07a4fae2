#include "ocrqa/features.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "ocrqa/block.hpp"
#include "ocrqa/resources.hpp"
#include "ocrqa/text.hpp"
#include "ocrqa/unicode.hpp"

namespace ocrqa {

double dict_feature(const Block& block, const Dictionary& dict) {
  const std::vector<std::string> tokens = tokenize(block.text);
  if (tokens.empty()) throw std::invalid_argument("dict_feature: block has no tokens");
  long long matched = 0;
  long long total = 0;
  for (const std::string& token : tokens) {
    const auto len = static_cast<long long>(char_count(token));
    total += len;
    if (dict.contains(token)) matched += len;
  }
  return static_cast<double>(matched) / static_cast<double>(total);
}

double trigram_feature(const Block& block, const TrigramProfile& profile) {
  long long cost = 0;
  long long count = 0;
  for (const std::string& token : tokenize(block.text)) {
    for (const std::string& tri : extract_trigrams(token)) {
      cost += std::min(profile.gamma, profile.rank(tri));
      ++count;
    }
  }
  if (count == 0) return 0.0;
  return 1.0 - static_cast<double>(cost) /
                   (static_cast<double>(profile.gamma) * static_cast<double>(count));
}

bool is_garbage(std::string_view token) {
  const std::u32string cps = uni::decode_utf8(token);
  const std::size_t n = cps.size();
  if (n == 0) return false;

  // rule 1: at least twenty-one characters
  if (n >= 21) return true;

  std::size_t same_run = 1, vowel_run = 0, consonant_run = 0;
  long long vowels = 0, consonants = 0, lowers = 0, uppers = 0, alnums = 0, non_alnums = 0;
  std::unordered_set<char32_t> interior_non_alnum;

  for (std::size_t i = 0; i < n; ++i) {
    const char32_t c = cps[i];
    const char32_t lc = uni::to_lower(c);
    const bool letter = uni::is_letter(c);
    const bool vowel = letter && uni::is_vowel(lc);
    const bool consonant = letter && !vowel;

    // rule 2: three consecutive occurrences of the same character
    if (i > 0 && lc == uni::to_lower(cps[i - 1])) {
      if (++same_run >= 3) return true;
    } else {
      same_run = 1;
    }
    // rule 3: four consecutive vowels
    vowel_run = vowel ? vowel_run + 1 : 0;
    if (vowel_run >= 4) return true;
    // rule 4: six consecutive consonants
    consonant_run = consonant ? consonant_run + 1 : 0;
    if (consonant_run >= 6) return true;

    vowels += vowel;
    consonants += consonant;
    lowers += letter && uni::is_lower(c);
    uppers += letter && uni::is_upper(c);
    const bool alnum = uni::is_alnum(c);
    alnums += alnum;
    non_alnums += !alnum;
    if (!alnum && i > 0 && i + 1 < n) interior_non_alnum.insert(c);
  }

  // rule 5: vowel/consonant imbalance beyond a factor of eight
  if (vowels >= 1 && consonants >= 1 &&
      (vowels > 8 * consonants || consonants > 8 * vowels))
    return true;
  // rule 6: a lower-case letter and even more upper-case letters
  if (lowers >= 1 && uppers > lowers) return true;
  // rule 7: an upper-case letter between lower-case first and last characters
  if (uppers >= 1 && uni::is_lower(cps.front()) && uni::is_lower(cps.back())) return true;
  // rule 8: an alphanumeric character and even more non-alphanumeric ones
  if (alnums >= 1 && non_alnums > alnums) return true;
  // rule 9: two distinct non-alphanumeric characters inside the token
  if (interior_non_alnum.size() >= 2) return true;

  return false;
}

double garbage_feature(const Block& block) {
  const std::vector<std::string> tokens = tokenize(block.text);
  if (tokens.empty()) throw std::invalid_argument("garbage_feature: block has no tokens");
  long long garbage = 0;
  for (const std::string& token : tokens) garbage += is_garbage(token);
  return 1.0 - static_cast<double>(garbage) / static_cast<double>(tokens.size());
}

int year_feature(const Block& block) {
  if (!block.year) throw std::invalid_argument("year_feature: block " + block.id + " has no year");
  return *block.year;
}

FeatureVector extract_features(const Block& block, const Dictionary& dict,
                               const TrigramProfile& profile) {
  FeatureVector fv;
  fv.dict_score = dict_feature(block, dict);
  fv.trigram_score = trigram_feature(block, profile);
  fv.clean_token_ratio = garbage_feature(block);
  fv.year = year_feature(block);
  return fv;
}

}  // namespace ocrqa
