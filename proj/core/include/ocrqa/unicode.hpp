#pragma once

// Minimal Unicode support for Latin-script text (the de/fr/lb corpus this
// toolkit targets). Covers ASCII, Latin-1 Supplement, Latin Extended-A/B and
// Latin Extended Additional for letter and case classification, and composes
// the common base + combining mark sequences into their precomposed forms.
// Code points outside these ranges pass through as non-letters.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ocrqa::uni {

// Decodes UTF-8 into code points. Invalid byte sequences become U+FFFD.
std::u32string decode_utf8(std::string_view s);
std::string encode_utf8(std::u32string_view cps);

// Canonical composition for Latin base + combining mark pairs
// (grave, acute, circumflex, tilde, diaeresis, ring, caron, cedilla).
std::u32string compose(std::u32string_view cps);

// decode -> compose -> encode. Applied once at ingestion.
std::string normalize(std::string_view s);

char32_t to_lower(char32_t c);
bool is_letter(char32_t c);
bool is_upper(char32_t c);
bool is_lower(char32_t c);
bool is_digit(char32_t c);
bool is_alnum(char32_t c);
bool is_space(char32_t c);
bool is_combining(char32_t c);

// Vowels are a e i o u plus the accented forms occurring in de/fr/lb
// (case-insensitive); y counts as a consonant.
bool is_vowel(char32_t c);

// End index of the grapheme cluster starting at i (base + combining marks).
std::size_t cluster_end(std::u32string_view cps, std::size_t i);

}  // namespace ocrqa::uni
