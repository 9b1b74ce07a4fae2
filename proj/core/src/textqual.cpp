#include "ocrqa/textqual.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "ocrqa/block.hpp"
#include "ocrqa/unicode.hpp"

namespace ocrqa {

std::size_t edit_distance(std::u32string_view a, std::u32string_view b) {
  // Keep the shorter string on the inner dimension: O(min(|a|,|b|)) memory.
  if (a.size() < b.size()) std::swap(a, b);
  const std::size_t m = a.size();
  const std::size_t n = b.size();
  if (n == 0) return m;

  std::vector<std::size_t> prev(n + 1);
  std::vector<std::size_t> cur(n + 1);
  std::iota(prev.begin(), prev.end(), std::size_t{0});
  for (std::size_t i = 1; i <= m; ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= n; ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] != b[j - 1]);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[n];
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  return edit_distance(uni::decode_utf8(a), uni::decode_utf8(b));
}

double quality(std::string_view block_text, std::string_view gt_text) {
  const std::u32string b = uni::decode_utf8(block_text);
  const std::u32string g = uni::decode_utf8(gt_text);
  if (b.empty()) throw std::invalid_argument("quality: empty block text");
  const std::size_t edit = edit_distance(b, g);
  return 1.0 - static_cast<double>(std::min(b.size(), edit)) / static_cast<double>(b.size());
}

double quality(const Block& block, const Block& gt) { return quality(block.text, gt.text); }

int label(double q_value, double theta) { return q_value < theta ? 1 : 0; }

QualityLabel make_label(const Block& block, const Block& gt, double theta) {
  QualityLabel out;
  out.q = quality(block, gt);
  out.theta = theta;
  out.cls = label(out.q, theta);
  return out;
}

}  // namespace ocrqa
