#include "ocrqa/unicode.hpp"

#include <algorithm>
#include <array>

namespace ocrqa::uni {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

// (base << 16) | mark -> precomposed, sorted by key.
struct Composition {
  std::uint32_t key;
  char32_t composed;
};

constexpr std::uint32_t ck(char32_t base, char32_t mark) {
  return (static_cast<std::uint32_t>(base) << 16) | static_cast<std::uint32_t>(mark);
}

// Marks: 0300 grave, 0301 acute, 0302 circumflex, 0303 tilde,
// 0308 diaeresis, 030A ring, 030C caron, 0327 cedilla.
constexpr Composition kCompositions[] = {
    {ck(U'A', 0x300), 0xC0},  {ck(U'A', 0x301), 0xC1},  {ck(U'A', 0x302), 0xC2},
    {ck(U'A', 0x303), 0xC3},  {ck(U'A', 0x308), 0xC4},  {ck(U'A', 0x30A), 0xC5},
    {ck(U'C', 0x301), 0x106}, {ck(U'C', 0x302), 0x108}, {ck(U'C', 0x30C), 0x10C},
    {ck(U'C', 0x327), 0xC7},  {ck(U'D', 0x30C), 0x10E}, {ck(U'E', 0x300), 0xC8},
    {ck(U'E', 0x301), 0xC9},  {ck(U'E', 0x302), 0xCA},  {ck(U'E', 0x308), 0xCB},
    {ck(U'E', 0x30C), 0x11A}, {ck(U'G', 0x302), 0x11C}, {ck(U'G', 0x327), 0x122},
    {ck(U'H', 0x302), 0x124}, {ck(U'I', 0x300), 0xCC},  {ck(U'I', 0x301), 0xCD},
    {ck(U'I', 0x302), 0xCE},  {ck(U'I', 0x303), 0x128}, {ck(U'I', 0x308), 0xCF},
    {ck(U'J', 0x302), 0x134}, {ck(U'K', 0x327), 0x136}, {ck(U'L', 0x301), 0x139},
    {ck(U'L', 0x30C), 0x13D}, {ck(U'L', 0x327), 0x13B}, {ck(U'N', 0x301), 0x143},
    {ck(U'N', 0x303), 0xD1},  {ck(U'N', 0x30C), 0x147}, {ck(U'N', 0x327), 0x145},
    {ck(U'O', 0x300), 0xD2},  {ck(U'O', 0x301), 0xD3},  {ck(U'O', 0x302), 0xD4},
    {ck(U'O', 0x303), 0xD5},  {ck(U'O', 0x308), 0xD6},  {ck(U'R', 0x301), 0x154},
    {ck(U'R', 0x30C), 0x158}, {ck(U'R', 0x327), 0x156}, {ck(U'S', 0x301), 0x15A},
    {ck(U'S', 0x302), 0x15C}, {ck(U'S', 0x30C), 0x160}, {ck(U'S', 0x327), 0x15E},
    {ck(U'T', 0x30C), 0x164}, {ck(U'T', 0x327), 0x162}, {ck(U'U', 0x300), 0xD9},
    {ck(U'U', 0x301), 0xDA},  {ck(U'U', 0x302), 0xDB},  {ck(U'U', 0x303), 0x168},
    {ck(U'U', 0x308), 0xDC},  {ck(U'U', 0x30A), 0x16E}, {ck(U'W', 0x302), 0x174},
    {ck(U'Y', 0x301), 0xDD},  {ck(U'Y', 0x302), 0x176}, {ck(U'Y', 0x308), 0x178},
    {ck(U'Z', 0x301), 0x179}, {ck(U'Z', 0x30C), 0x17D}, {ck(U'a', 0x300), 0xE0},
    {ck(U'a', 0x301), 0xE1},  {ck(U'a', 0x302), 0xE2},  {ck(U'a', 0x303), 0xE3},
    {ck(U'a', 0x308), 0xE4},  {ck(U'a', 0x30A), 0xE5},  {ck(U'c', 0x301), 0x107},
    {ck(U'c', 0x302), 0x109}, {ck(U'c', 0x30C), 0x10D}, {ck(U'c', 0x327), 0xE7},
    {ck(U'd', 0x30C), 0x10F}, {ck(U'e', 0x300), 0xE8},  {ck(U'e', 0x301), 0xE9},
    {ck(U'e', 0x302), 0xEA},  {ck(U'e', 0x308), 0xEB},  {ck(U'e', 0x30C), 0x11B},
    {ck(U'g', 0x302), 0x11D}, {ck(U'g', 0x327), 0x123}, {ck(U'h', 0x302), 0x125},
    {ck(U'i', 0x300), 0xEC},  {ck(U'i', 0x301), 0xED},  {ck(U'i', 0x302), 0xEE},
    {ck(U'i', 0x303), 0x129}, {ck(U'i', 0x308), 0xEF},  {ck(U'j', 0x302), 0x135},
    {ck(U'k', 0x327), 0x137}, {ck(U'l', 0x301), 0x13A}, {ck(U'l', 0x30C), 0x13E},
    {ck(U'l', 0x327), 0x13C}, {ck(U'n', 0x301), 0x144}, {ck(U'n', 0x303), 0xF1},
    {ck(U'n', 0x30C), 0x148}, {ck(U'n', 0x327), 0x146}, {ck(U'o', 0x300), 0xF2},
    {ck(U'o', 0x301), 0xF3},  {ck(U'o', 0x302), 0xF4},  {ck(U'o', 0x303), 0xF5},
    {ck(U'o', 0x308), 0xF6},  {ck(U'r', 0x301), 0x155}, {ck(U'r', 0x30C), 0x159},
    {ck(U'r', 0x327), 0x157}, {ck(U's', 0x301), 0x15B}, {ck(U's', 0x302), 0x15D},
    {ck(U's', 0x30C), 0x161}, {ck(U's', 0x327), 0x15F}, {ck(U't', 0x30C), 0x165},
    {ck(U't', 0x327), 0x163}, {ck(U'u', 0x300), 0xF9},  {ck(U'u', 0x301), 0xFA},
    {ck(U'u', 0x302), 0xFB},  {ck(U'u', 0x303), 0x169}, {ck(U'u', 0x308), 0xFC},
    {ck(U'u', 0x30A), 0x16F}, {ck(U'w', 0x302), 0x175}, {ck(U'y', 0x301), 0xFD},
    {ck(U'y', 0x302), 0x177}, {ck(U'y', 0x308), 0xFF},  {ck(U'z', 0x301), 0x17A},
    {ck(U'z', 0x30C), 0x17E},
};

char32_t lookup_composition(char32_t base, char32_t mark) {
  const std::uint32_t key = ck(base, mark);
  auto it = std::lower_bound(std::begin(kCompositions), std::end(kCompositions), key,
                             [](const Composition& c, std::uint32_t k) { return c.key < k; });
  if (it != std::end(kCompositions) && it->key == key) return it->composed;
  return 0;
}

constexpr char32_t kVowels[] = {
    U'a', U'e', U'i', U'o', U'u',        // base vowels
    0xE4, 0xF6, 0xFC,                    // ä ö ü
    0xE9, 0xE8, 0xEA, 0xEB,              // é è ê ë
    0xE0, 0xE2,                          // à â
    0xEE, 0xEF,                          // î ï
    0xF4,                                // ô
    0xF9, 0xFB,                          // ù û
};

}  // namespace

std::u32string decode_utf8(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t i = 0;
  const auto n = s.size();
  while (i < n) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) {
      out.push_back(b0);
      ++i;
      continue;
    }
    int len = 0;
    char32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
    } else {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    if (i + len > n) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    bool ok = true;
    for (int k = 1; k < len; ++k) {
      const auto b = static_cast<unsigned char>(s[i + k]);
      if ((b & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (b & 0x3F);
    }
    // Reject overlong encodings and surrogates.
    if (ok && ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
               (len == 4 && cp < 0x10000) || cp > 0x10FFFF ||
               (cp >= 0xD800 && cp <= 0xDFFF))) {
      ok = false;
    }
    if (!ok) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string encode_utf8(std::u32string_view cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) {
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) cp = kReplacement;
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

std::u32string compose(std::u32string_view cps) {
  std::u32string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) {
    if (!out.empty() && is_combining(cp)) {
      if (const char32_t c = lookup_composition(out.back(), cp)) {
        out.back() = c;
        continue;
      }
    }
    out.push_back(cp);
  }
  return out;
}

std::string normalize(std::string_view s) { return encode_utf8(compose(decode_utf8(s))); }

char32_t to_lower(char32_t c) {
  if (c >= U'A' && c <= U'Z') return c + 0x20;
  if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return c + 0x20;
  if (c == 0x130) return U'i';  // I with dot above
  if (c >= 0x100 && c <= 0x137 && (c % 2) == 0) return c + 1;
  if (c >= 0x139 && c <= 0x147 && (c % 2) == 1) return c + 1;
  if (c >= 0x14A && c <= 0x176 && (c % 2) == 0) return c + 1;
  if (c == 0x178) return 0xFF;  // Y diaeresis
  if (c >= 0x179 && c <= 0x17D && (c % 2) == 1) return c + 1;
  if (c >= 0x1E00 && c <= 0x1E94 && (c % 2) == 0) return c + 1;
  if (c == 0x1E9E) return 0xDF;  // capital sharp s
  if (c >= 0x1EA0 && c <= 0x1EFE && (c % 2) == 0) return c + 1;
  return c;
}

bool is_upper(char32_t c) {
  if (c >= U'A' && c <= U'Z') return true;
  if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return true;
  if (c >= 0x100 && c <= 0x137 && (c % 2) == 0) return true;
  if (c >= 0x139 && c <= 0x147 && (c % 2) == 1) return true;
  if (c >= 0x14A && c <= 0x176 && (c % 2) == 0) return true;
  if (c == 0x178) return true;
  if (c >= 0x179 && c <= 0x17D && (c % 2) == 1) return true;
  if (c >= 0x1E00 && c <= 0x1E94 && (c % 2) == 0) return true;
  if (c == 0x1E9E) return true;
  if (c >= 0x1EA0 && c <= 0x1EFE && (c % 2) == 0) return true;
  return false;
}

bool is_lower(char32_t c) {
  if (c >= U'a' && c <= U'z') return true;
  if (c >= 0xDF && c <= 0xFF && c != 0xF7) return true;
  if (c >= 0x101 && c <= 0x137 && (c % 2) == 1) return true;
  if (c == 0x131 || c == 0x138 || c == 0x149) return true;
  if (c >= 0x13A && c <= 0x148 && (c % 2) == 0) return true;
  if (c >= 0x14B && c <= 0x177 && (c % 2) == 1) return true;
  if (c >= 0x17A && c <= 0x17E && (c % 2) == 0) return true;
  if (c == 0x17F) return true;  // long s
  if (c >= 0x1E01 && c <= 0x1E95 && (c % 2) == 1) return true;
  if (c >= 0x1E96 && c <= 0x1E9D) return true;
  if (c == 0x1E9F) return true;
  if (c >= 0x1EA1 && c <= 0x1EFF && (c % 2) == 1) return true;
  return false;
}

bool is_letter(char32_t c) {
  if ((c >= U'A' && c <= U'Z') || (c >= U'a' && c <= U'z')) return true;
  if (c >= 0xC0 && c <= 0xFF && c != 0xD7 && c != 0xF7) return true;
  if (c >= 0x100 && c <= 0x24F) return true;   // Latin Extended-A/B
  if (c >= 0x1E00 && c <= 0x1EFF) return true; // Latin Extended Additional
  return false;
}

bool is_digit(char32_t c) { return c >= U'0' && c <= U'9'; }

bool is_alnum(char32_t c) { return is_letter(c) || is_digit(c); }

bool is_space(char32_t c) {
  switch (c) {
    case 0x09:
    case 0x0A:
    case 0x0B:
    case 0x0C:
    case 0x0D:
    case 0x20:
    case 0x85:
    case 0xA0:
    case 0x1680:
    case 0x2028:
    case 0x2029:
    case 0x202F:
    case 0x205F:
    case 0x3000:
      return true;
    default:
      return c >= 0x2000 && c <= 0x200A;
  }
}

bool is_combining(char32_t c) { return c >= 0x300 && c <= 0x36F; }

bool is_vowel(char32_t c) {
  const char32_t l = to_lower(c);
  for (char32_t v : kVowels) {
    if (l == v) return true;
  }
  return false;
}

std::size_t cluster_end(std::u32string_view cps, std::size_t i) {
  std::size_t j = i + 1;
  while (j < cps.size() && is_combining(cps[j])) ++j;
  return j;
}

}  // namespace ocrqa::uni
