#include "ocrqa/langid.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ocrqa/block.hpp"
#include "ocrqa/text.hpp"
#include "ocrqa/unicode.hpp"

namespace ocrqa {

namespace {

void count_ngrams(std::string_view text, std::unordered_map<std::string, long long>& counts) {
  for (const std::u32string& run : letter_runs(text)) {
    const std::size_t len = run.size();
    for (std::size_t n = 1; n <= 5; ++n) {
      if (len < n) break;
      for (std::size_t i = 0; i + n <= len; ++i) {
        counts[uni::encode_utf8({run.data() + i, n})] += 1;
      }
    }
  }
}

LanguageProfile profile_from_counts(std::unordered_map<std::string, long long>&& counts,
                                    std::string lang, int max_rank) {
  std::vector<std::pair<std::string, long long>> ranked(counts.begin(), counts.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (ranked.size() > static_cast<std::size_t>(max_rank)) ranked.resize(max_rank);

  LanguageProfile profile;
  profile.lang = std::move(lang);
  profile.max_rank = max_rank;
  profile.ngrams.reserve(ranked.size());
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    profile.rank_of.emplace(ranked[i].first, static_cast<int>(i));
    profile.ngrams.push_back(std::move(ranked[i].first));
  }
  return profile;
}

}  // namespace

LanguageProfile build_language_profile(std::string_view corpus_text, std::string lang,
                                       int max_rank) {
  if (max_rank < 1) throw std::invalid_argument("max_rank must be >= 1");
  std::unordered_map<std::string, long long> counts;
  count_ngrams(corpus_text, counts);
  if (counts.empty())
    throw std::invalid_argument("corpus for language profile contains no letters");
  return profile_from_counts(std::move(counts), std::move(lang), max_rank);
}

long long profile_distance(const LanguageProfile& doc, const LanguageProfile& ref) {
  long long total = 0;
  for (std::size_t rank = 0; rank < doc.ngrams.size(); ++rank) {
    const auto it = ref.rank_of.find(doc.ngrams[rank]);
    const long long ref_rank = it == ref.rank_of.end() ? ref.max_rank : it->second;
    total += std::abs(static_cast<long long>(rank) - ref_rank);
  }
  return total;
}

void save_language_profile(std::ostream& out, const LanguageProfile& profile) {
  out << profile.lang << ' ' << profile.max_rank << '\n';
  for (std::size_t rank = 0; rank < profile.ngrams.size(); ++rank)
    out << profile.ngrams[rank] << '\t' << rank << '\n';
}

LanguageProfile load_language_profile(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw std::runtime_error("empty language profile");
  std::istringstream hs(header);
  LanguageProfile profile;
  if (!(hs >> profile.lang >> profile.max_rank) || profile.max_rank < 1)
    throw std::runtime_error("bad language profile header: " + header);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw std::runtime_error("bad language profile line: " + line);
    const int rank = std::stoi(line.substr(tab + 1));
    if (rank != static_cast<int>(profile.ngrams.size()))
      throw std::runtime_error("language profile ranks must be dense and ascending");
    profile.ngrams.push_back(line.substr(0, tab));
    profile.rank_of.emplace(profile.ngrams.back(), rank);
  }
  if (profile.ngrams.empty()) throw std::runtime_error("language profile has no entries");
  return profile;
}

StopwordList load_stopwords(std::istream& in, std::string lang, double hit_threshold) {
  StopwordList stops;
  stops.lang = std::move(lang);
  stops.hit_threshold = hit_threshold;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::u32string cps = uni::decode_utf8(line);
    std::u32string lowered;
    lowered.reserve(cps.size());
    for (char32_t cp : cps) lowered.push_back(uni::to_lower(cp));
    stops.words.insert(uni::encode_utf8(lowered));
  }
  if (stops.words.empty()) throw std::runtime_error("stop-word list is empty");
  return stops;
}

const StopwordList& builtin_lb_stopwords() {
  static const StopwordList stops = [] {
    StopwordList s;
    s.lang = "lb";
    s.hit_threshold = 0.15;
    s.words = {
        "an",    "ass",   "awer",  "bei",   "bis",    "d'",    "dat",   "datt",
        "de",    "dem",   "den",   "der",   "dee",    "déi",   "dës",   "do",
        "du",    "duerch","ech",   "een",   "eng",    "enger", "et",    "fir",
        "ginn",  "gouf",  "hat",   "hatt",  "hien",   "hu",    "hunn",  "huet",
        "iwwer", "jo",    "kee",   "keng",  "koum",   "mat",   "mä",    "méi",
        "mir",   "nach",  "net",   "nëmmen","no",     "och",   "om",    "op",
        "ons",   "schonn","seng",  "senger","si",     "sinn",  "sech",  "ze",
        "zu",    "vun",   "wann",  "war",   "waren",  "wat",   "well",  "wéi",
        "wien",  "wou",   "ëm",    "ënner", "elo",    "ganz",  "hei",   "vill",
    };
    return s;
  }();
  return stops;
}

std::optional<std::string> detect_language(const Block& block, const StopwordList& stops,
                                           const std::vector<LanguageProfile>& profiles,
                                           const DetectorConfig& config) {
  const std::vector<std::string> tokens = tokenize(block.text);
  if (tokens.empty()) return std::nullopt;

  std::size_t hits = 0;
  for (const std::string& token : tokens) {
    const std::u32string cps = uni::decode_utf8(token);
    std::u32string lowered;
    lowered.reserve(cps.size());
    for (char32_t cp : cps) lowered.push_back(uni::to_lower(cp));
    if (stops.words.count(uni::encode_utf8(lowered))) ++hits;
  }
  if (static_cast<double>(hits) / static_cast<double>(tokens.size()) >= stops.hit_threshold)
    return stops.lang;

  std::unordered_map<std::string, long long> counts;
  count_ngrams(block.text, counts);
  if (counts.empty()) return std::nullopt;
  const LanguageProfile doc =
      profile_from_counts(std::move(counts), "doc", config.doc_max_rank);

  const LanguageProfile* best = nullptr;
  long long best_distance = 0;
  for (const LanguageProfile& ref : profiles) {
    const long long d = profile_distance(doc, ref);
    if (!best || d < best_distance) {
      best = &ref;
      best_distance = d;
    }
  }
  if (!best) return std::nullopt;

  const double ceiling = config.abstain_ceiling *
                         static_cast<double>(doc.ngrams.size()) *
                         static_cast<double>(best->max_rank);
  if (static_cast<double>(best_distance) > ceiling) return std::nullopt;
  return best->lang;
}

}  // namespace ocrqa
