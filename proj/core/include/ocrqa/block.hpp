#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ocrqa {

// Which OCR pass a text block came from. Wire names: ori, new, bad, gt.
enum class Variant { original, reprocessed, degraded, ground_truth };

std::string variant_name(Variant v);
std::optional<Variant> variant_from_name(std::string_view name);

// One OCR text block. Text is stored in canonical composed form; blocks that
// normalize to the empty string are rejected at ingestion because the quality
// measure divides by the character count.
struct Block {
  std::string id;
  std::string text;
  std::optional<int> year;
  std::optional<std::string> lang;  // de, fr or lb
  Variant variant = Variant::original;
  std::optional<std::string> gt_id;
  // Unknown input fields, key -> serialized JSON value. Preserved on save.
  std::map<std::string, std::string> extra;
};

struct LoadReport {
  struct Skip {
    std::size_t line;  // 1-based
    std::string reason;
  };
  std::vector<Skip> skipped;
};

// One JSON object per line: id, text, year, lang (optional), variant,
// gt_id (optional). Records failing validation are reported and skipped;
// a duplicate id is fatal. Text is normalized on load.
std::vector<Block> load_blocks(std::istream& in, LoadReport* report = nullptr);
std::vector<Block> load_blocks_file(const std::string& path, LoadReport* report = nullptr);

void save_blocks(std::ostream& out, const std::vector<Block>& blocks);
std::string blocks_to_string(const std::vector<Block>& blocks);

struct GtPairing {
  // Indices into the input vector: (block, its ground-truth block).
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  // (block id, unresolved gt_id)
  std::vector<std::pair<std::string, std::string>> dangling;
};

// Pairs every non-gt block carrying a gt_id with its ground-truth block.
GtPairing pair_ground_truth(const std::vector<Block>& blocks);

}  // namespace ocrqa
