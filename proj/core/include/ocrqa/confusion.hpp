#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace ocrqa {

struct ConfusionEntry {
  std::string source;       // grapheme cluster sequence to match
  std::string replacement;  // may be empty (deletion)
  double weight = 1.0;      // relative, strictly positive
};

struct ConfusionTable {
  std::vector<ConfusionEntry> entries;
  double max_weight() const;
};

// Throws if the table has no entries, an empty source or a non-positive weight.
void validate(const ConfusionTable& table);

// One "source TAB replacement TAB weight" per line; # starts a comment.
ConfusionTable load_confusion_table(std::istream& in);
void save_confusion_table(std::ostream& out, const ConfusionTable& table);

// Gothic-typeface style confusions (u/n, long-s/f, broken glyph splits).
// Used when no table file is given; replaceable via load_confusion_table.
const ConfusionTable& default_confusion_table();

// Scans left to right over grapheme clusters. Where a source sequence matches
// (longest source first, then table order), it is replaced with probability
// rate * weight / max_weight. Deterministic in (text, table, rate, seed).
std::string degrade(std::string_view text, const ConfusionTable& table, double rate,
                    std::uint64_t seed);

}  // namespace ocrqa
