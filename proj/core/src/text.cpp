#include "ocrqa/text.hpp"

#include "ocrqa/unicode.hpp"

namespace ocrqa {

std::size_t char_count(std::string_view text) { return uni::decode_utf8(text).size(); }

std::vector<std::string> tokenize(std::string_view text) {
  const std::u32string cps = uni::decode_utf8(text);
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < cps.size()) {
    while (i < cps.size() && uni::is_space(cps[i])) ++i;
    std::size_t start = i;
    while (i < cps.size() && !uni::is_space(cps[i])) ++i;
    if (i > start) tokens.push_back(uni::encode_utf8({cps.data() + start, i - start}));
  }
  return tokens;
}

std::vector<std::u32string> letter_runs(std::string_view text) {
  const std::u32string cps = uni::decode_utf8(text);
  std::vector<std::u32string> runs;
  std::u32string cur;
  for (char32_t cp : cps) {
    if (uni::is_letter(cp)) {
      cur.push_back(uni::to_lower(cp));
    } else if (!cur.empty()) {
      runs.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) runs.push_back(std::move(cur));
  return runs;
}

}  // namespace ocrqa
