#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace ocrqa {

struct Block;

// Levenshtein distance over Unicode scalar values (unit-cost insert, delete,
// substitute), two-row dynamic program.
std::size_t edit_distance(std::u32string_view a, std::u32string_view b);
std::size_t edit_distance(std::string_view a, std::string_view b);

// q = 1 - min(|block|, edit(block, gt)) / |block|, in [0,1].
// Throws when the block text is empty (filtered at ingestion).
double quality(const Block& block, const Block& gt);
double quality(std::string_view block_text, std::string_view gt_text);

// Class 1 (insufficient) iff q < theta; the boundary q == theta is
// sufficient. Note the paper's printed inequality reads the other way
// around, which contradicts its own class semantics and positivity rates;
// this is the direction consistent with both.
int label(double q_value, double theta);

struct QualityLabel {
  double q = 0.0;
  double theta = 0.0;
  int cls = 0;  // 0 sufficient, 1 insufficient
};

QualityLabel make_label(const Block& block, const Block& gt, double theta);

}  // namespace ocrqa
