#include "ocrqa/resources.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ocrqa/text.hpp"
#include "ocrqa/unicode.hpp"

namespace ocrqa {

namespace {

// Lowercase and strip leading/trailing non-letters: "vorn?" -> "vorn".
std::string normalize_for_lookup(std::string_view token) {
  const std::u32string cps = uni::decode_utf8(token);
  std::size_t begin = 0;
  std::size_t end = cps.size();
  while (begin < end && !uni::is_letter(cps[begin])) ++begin;
  while (end > begin && !uni::is_letter(cps[end - 1])) --end;
  std::u32string lowered;
  lowered.reserve(end - begin);
  for (std::size_t i = begin; i < end; ++i) lowered.push_back(uni::to_lower(cps[i]));
  return uni::encode_utf8(lowered);
}

}  // namespace

bool Dictionary::contains(std::string_view token) const {
  const std::string key = normalize_for_lookup(token);
  if (key.empty()) return false;
  return entries.count(key) > 0;
}

Dictionary load_dictionary(std::istream& in, std::string lang) {
  Dictionary dict;
  dict.lang = std::move(lang);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    for (const std::string& token : tokenize(line)) {
      const std::string key = normalize_for_lookup(token);
      if (!key.empty()) dict.entries.insert(key);
    }
  }
  if (dict.entries.empty()) throw std::runtime_error("dictionary file is empty");
  return dict;
}

std::vector<std::string> extract_trigrams(std::string_view token) {
  std::vector<std::string> out;
  for (const std::u32string& run : letter_runs(token)) {
    if (run.size() < 3) continue;
    for (std::size_t i = 0; i + 3 <= run.size(); ++i)
      out.push_back(uni::encode_utf8({run.data() + i, 3}));
  }
  return out;
}

int TrigramProfile::rank(const std::string& trigram) const {
  const auto it = rank_of.find(trigram);
  return it == rank_of.end() ? gamma : it->second;
}

TrigramProfile build_trigram_profile(std::string_view corpus_text, std::string lang, int gamma) {
  if (gamma < 1) throw std::invalid_argument("gamma must be >= 1");
  std::unordered_map<std::string, long long> counts;
  for (const std::string& token : tokenize(corpus_text)) {
    for (std::string& tri : extract_trigrams(token)) counts[std::move(tri)] += 1;
  }
  if (counts.empty()) throw std::invalid_argument("corpus yields no tri-grams");

  std::vector<std::pair<std::string, long long>> ranked(counts.begin(), counts.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (ranked.size() > static_cast<std::size_t>(gamma)) ranked.resize(gamma);

  TrigramProfile profile;
  profile.lang = std::move(lang);
  profile.gamma = gamma;
  for (std::size_t i = 0; i < ranked.size(); ++i)
    profile.rank_of.emplace(std::move(ranked[i].first), static_cast<int>(i));
  return profile;
}

void save_trigram_profile(std::ostream& out, const TrigramProfile& profile) {
  out << profile.lang << ' ' << profile.gamma << '\n';
  std::vector<std::pair<int, std::string>> rows;
  rows.reserve(profile.rank_of.size());
  for (const auto& [tri, rank] : profile.rank_of) rows.emplace_back(rank, tri);
  std::sort(rows.begin(), rows.end());
  for (const auto& [rank, tri] : rows) out << tri << '\t' << rank << '\n';
}

TrigramProfile load_trigram_profile(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw std::runtime_error("empty tri-gram profile");
  std::istringstream hs(header);
  TrigramProfile profile;
  if (!(hs >> profile.lang >> profile.gamma) || profile.gamma < 1)
    throw std::runtime_error("bad tri-gram profile header: " + header);
  std::string line;
  int expected_rank = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw std::runtime_error("bad tri-gram profile line: " + line);
    const int rank = std::stoi(line.substr(tab + 1));
    if (rank != expected_rank++)
      throw std::runtime_error("tri-gram profile ranks must be dense and ascending");
    if (rank >= profile.gamma) throw std::runtime_error("tri-gram rank exceeds gamma");
    profile.rank_of.emplace(line.substr(0, tab), rank);
  }
  if (profile.rank_of.empty()) throw std::runtime_error("tri-gram profile has no entries");
  return profile;
}

}  // namespace ocrqa
