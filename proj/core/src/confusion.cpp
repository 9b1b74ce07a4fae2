#include "ocrqa/confusion.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "ocrqa/io_util.hpp"
#include "ocrqa/rng.hpp"
#include "ocrqa/unicode.hpp"

namespace ocrqa {

double ConfusionTable::max_weight() const {
  double m = 0.0;
  for (const auto& e : entries) m = std::max(m, e.weight);
  return m;
}

void validate(const ConfusionTable& table) {
  if (table.entries.empty()) throw std::invalid_argument("confusion table has no entries");
  for (const auto& e : table.entries) {
    if (e.source.empty()) throw std::invalid_argument("confusion table entry with empty source");
    if (!(e.weight > 0.0))
      throw std::invalid_argument("confusion table weight must be positive: " + e.source);
  }
}

ConfusionTable load_confusion_table(std::istream& in) {
  ConfusionTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto tab1 = line.find('\t');
    const auto tab2 = tab1 == std::string::npos ? std::string::npos : line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos)
      throw std::runtime_error("confusion table line " + std::to_string(line_no) +
                               ": expected 'source TAB replacement TAB weight'");
    ConfusionEntry e;
    e.source = line.substr(0, tab1);
    e.replacement = line.substr(tab1 + 1, tab2 - tab1 - 1);
    try {
      e.weight = std::stod(line.substr(tab2 + 1));
    } catch (const std::exception&) {
      throw std::runtime_error("confusion table line " + std::to_string(line_no) +
                               ": bad weight");
    }
    table.entries.push_back(std::move(e));
  }
  validate(table);
  return table;
}

void save_confusion_table(std::ostream& out, const ConfusionTable& table) {
  for (const auto& e : table.entries)
    out << e.source << '\t' << e.replacement << '\t' << format_double(e.weight) << '\n';
}

const ConfusionTable& default_confusion_table() {
  static const ConfusionTable table = [] {
    ConfusionTable t;
    t.entries = {
        // classic u/n and long-s confusions
        {"u", "n", 1.0},   {"n", "u", 1.0},   {"s", "f", 1.0},   {"f", "s", 0.8},
        {"e", "c", 1.0},   {"c", "e", 0.8},
        // broken or split glyphs
        {"h", "li", 1.0},  {"d", "cl", 1.0},  {"m", "rn", 1.0},  {"rn", "m", 0.8},
        {"w", "vv", 1.0},  {"b", "lo", 0.8},  {"ß", "fs", 0.8},
        // single-glyph misreads
        {"i", "j", 1.0},   {"r", "t", 1.0},   {"t", "r", 1.0},   {"a", "o", 1.0},
        {"o", "a", 0.8},   {"k", "f", 0.8},   {"g", "q", 0.8},   {"z", "x", 0.6},
        {"v", "o", 0.6},   {"l", "i", 0.8},
        // capitals
        {"W", "B", 1.0},   {"B", "W", 0.6},   {"P", "s", 0.6},   {"S", "G", 0.6},
        {"D", "O", 0.6},
        // diacritic loss
        {"ä", "a", 0.8},   {"ö", "o", 0.8},   {"ü", "n", 0.8},   {"é", "e", 0.8},
        {"è", "e", 0.8},   {"ç", "c", 0.8},
    };
    return t;
  }();
  return table;
}

std::string degrade(std::string_view text, const ConfusionTable& table, double rate,
                    std::uint64_t seed) {
  validate(table);
  if (rate < 0.0 || rate > 1.0) throw std::invalid_argument("degrade rate must be in [0,1]");

  const std::u32string cps = uni::decode_utf8(text);
  const double wmax = table.max_weight();

  std::vector<std::u32string> sources;
  std::vector<std::u32string> replacements;
  sources.reserve(table.entries.size());
  for (const auto& e : table.entries) {
    sources.push_back(uni::decode_utf8(e.source));
    replacements.push_back(uni::decode_utf8(e.replacement));
  }
  // Longest source wins at a given position; ties keep table order.
  std::vector<std::size_t> order(sources.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return sources[a].size() > sources[b].size();
  });

  Rng rng(seed);
  std::u32string out;
  out.reserve(cps.size());
  std::size_t i = 0;
  const std::size_t n = cps.size();
  while (i < n) {
    std::size_t match = sources.size();
    for (const std::size_t idx : order) {
      const auto& src = sources[idx];
      const std::size_t len = src.size();
      if (i + len > n) continue;
      if (!std::equal(src.begin(), src.end(), cps.begin() + static_cast<std::ptrdiff_t>(i)))
        continue;
      // The match must end on a grapheme-cluster boundary.
      if (i + len < n && uni::is_combining(cps[i + len])) continue;
      match = idx;
      break;
    }
    if (match < sources.size() && rng.bernoulli(rate * table.entries[match].weight / wmax)) {
      out += replacements[match];
      i += sources[match].size();
      continue;
    }
    const std::size_t j = uni::cluster_end(cps, i);
    out.append(cps, i, j - i);
    i = j;
  }
  return uni::encode_utf8(out);
}

}  // namespace ocrqa
