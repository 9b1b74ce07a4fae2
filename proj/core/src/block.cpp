#include "ocrqa/block.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "ocrqa/text.hpp"
#include "ocrqa/unicode.hpp"

namespace ocrqa {

using nlohmann::json;

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::original: return "ori";
    case Variant::reprocessed: return "new";
    case Variant::degraded: return "bad";
    case Variant::ground_truth: return "gt";
  }
  return "ori";
}

std::optional<Variant> variant_from_name(std::string_view name) {
  if (name == "ori") return Variant::original;
  if (name == "new") return Variant::reprocessed;
  if (name == "bad") return Variant::degraded;
  if (name == "gt") return Variant::ground_truth;
  return std::nullopt;
}

namespace {

Block parse_block(const json& j) {
  if (!j.is_object()) throw std::runtime_error("record is not a JSON object");
  Block b;
  for (const auto& [key, value] : j.items()) {
    if (key == "id") {
      if (!value.is_string()) throw std::runtime_error("id must be a string");
      b.id = value.get<std::string>();
    } else if (key == "text") {
      if (!value.is_string()) throw std::runtime_error("text must be a string");
      b.text = uni::normalize(value.get<std::string>());
    } else if (key == "year") {
      if (!value.is_number_integer()) throw std::runtime_error("year must be an integer");
      b.year = value.get<int>();
    } else if (key == "lang") {
      if (!value.is_string()) throw std::runtime_error("lang must be a string");
      b.lang = value.get<std::string>();
    } else if (key == "variant") {
      if (!value.is_string()) throw std::runtime_error("variant must be a string");
      const auto v = variant_from_name(value.get<std::string>());
      if (!v) throw std::runtime_error("unknown variant: " + value.get<std::string>());
      b.variant = *v;
    } else if (key == "gt_id") {
      if (!value.is_string()) throw std::runtime_error("gt_id must be a string");
      b.gt_id = value.get<std::string>();
    } else {
      b.extra[key] = value.dump();
    }
  }
  if (b.id.empty()) throw std::runtime_error("missing or empty id");
  if (char_count(b.text) == 0) throw std::runtime_error("empty text after normalization");
  if (!b.year) throw std::runtime_error("missing year");
  if (*b.year < 1 || *b.year > 9999) throw std::runtime_error("year out of range");
  if (b.variant == Variant::ground_truth && b.gt_id)
    throw std::runtime_error("ground-truth block must not carry gt_id");
  return b;
}

json block_to_json(const Block& b) {
  json j;
  j["id"] = b.id;
  j["text"] = b.text;
  if (b.year) j["year"] = *b.year;
  if (b.lang) j["lang"] = *b.lang;
  j["variant"] = variant_name(b.variant);
  if (b.gt_id) j["gt_id"] = *b.gt_id;
  for (const auto& [key, value] : b.extra) j[key] = json::parse(value);
  return j;
}

}  // namespace

std::vector<Block> load_blocks(std::istream& in, LoadReport* report) {
  std::vector<Block> blocks;
  std::unordered_set<std::string> seen_ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      Block b = parse_block(json::parse(line));
      if (!seen_ids.insert(b.id).second)
        throw std::invalid_argument("duplicate block id: " + b.id);
      blocks.push_back(std::move(b));
    } catch (const std::invalid_argument&) {
      throw;  // duplicate ids are fatal
    } catch (const std::exception& e) {
      if (report) report->skipped.push_back({line_no, e.what()});
    }
  }
  return blocks;
}

std::vector<Block> load_blocks_file(const std::string& path, LoadReport* report) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open block file: " + path);
  return load_blocks(in, report);
}

void save_blocks(std::ostream& out, const std::vector<Block>& blocks) {
  for (const Block& b : blocks) out << block_to_json(b).dump() << '\n';
}

std::string blocks_to_string(const std::vector<Block>& blocks) {
  std::ostringstream ss;
  save_blocks(ss, blocks);
  return ss.str();
}

GtPairing pair_ground_truth(const std::vector<Block>& blocks) {
  std::unordered_map<std::string, std::size_t> gt_index;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].variant == Variant::ground_truth) gt_index.emplace(blocks[i].id, i);
  }
  GtPairing out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const Block& b = blocks[i];
    if (b.variant == Variant::ground_truth || !b.gt_id) continue;
    const auto it = gt_index.find(*b.gt_id);
    if (it == gt_index.end()) {
      out.dangling.emplace_back(b.id, *b.gt_id);
    } else {
      out.pairs.emplace_back(i, it->second);
    }
  }
  return out;
}

}  // namespace ocrqa
