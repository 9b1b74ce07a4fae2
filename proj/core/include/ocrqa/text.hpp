#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ocrqa {

// Number of Unicode scalar values, whitespace included. Text is expected to
// be in the canonical composed form produced at ingestion.
std::size_t char_count(std::string_view text);

// Splits on maximal runs of Unicode whitespace; never yields empty tokens.
std::vector<std::string> tokenize(std::string_view text);

// Maximal runs of letters, lowercased. Non-letters (digits, punctuation)
// break runs. Shared by the n-gram extractors.
std::vector<std::u32string> letter_runs(std::string_view text);

}  // namespace ocrqa
