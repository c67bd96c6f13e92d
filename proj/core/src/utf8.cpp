#include "scansion/utf8.hpp"

namespace scansion::utf8 {

std::u32string decode(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const auto c = static_cast<unsigned char>(text[i]);
    char32_t cp = 0;
    std::size_t extra = 0;
    if (c < 0x80) {
      cp = c;
    } else if ((c & 0xE0) == 0xC0) {
      cp = c & 0x1F;
      extra = 1;
    } else if ((c & 0xF0) == 0xE0) {
      cp = c & 0x0F;
      extra = 2;
    } else if ((c & 0xF8) == 0xF0) {
      cp = c & 0x07;
      extra = 3;
    } else {
      out.push_back(U'�');
      ++i;
      continue;
    }
    bool ok = true;
    for (std::size_t k = 1; k <= extra; ++k) {
      if (i + k >= text.size()) {
        ok = false;
        break;
      }
      const auto cc = static_cast<unsigned char>(text[i + k]);
      if ((cc & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (cc & 0x3F);
    }
    if (!ok) {
      out.push_back(U'�');
      ++i;
      continue;
    }
    out.push_back(cp);
    i += extra + 1;
  }
  return out;
}

std::string encode(char32_t cp) {
  std::string out;
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
  return out;
}

std::string encode(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) out += encode(cp);
  return out;
}

std::size_t length(std::string_view text) { return decode(text).size(); }

char32_t to_lower(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  return cp;
}

std::string to_lower(std::string_view text) {
  auto cps = decode(text);
  for (auto& cp : cps) cp = to_lower(cp);
  return encode(cps);
}

bool is_apostrophe(char32_t cp) {
  return cp == U'\'' || cp == U'’' || cp == U'ʼ' || cp == U'‘' || cp == U'´';
}

char32_t base_vowel(char32_t cp) {
  switch (to_lower(cp)) {
    case U'a': case U'à': case U'á': case U'â': case U'ä':
      return U'a';
    case U'e': case U'è': case U'é': case U'ê': case U'ë':
      return U'e';
    case U'i': case U'ì': case U'í': case U'î': case U'ï':
      return U'i';
    case U'o': case U'ò': case U'ó': case U'ô': case U'ö':
      return U'o';
    case U'u': case U'ù': case U'ú': case U'û': case U'ü':
      return U'u';
    case U'y': case U'ÿ': case U'ý':
      return U'y';
    default:
      return cp;
  }
}

bool is_vowel(char32_t cp) {
  const char32_t b = base_vowel(cp);
  return b == U'a' || b == U'e' || b == U'i' || b == U'o' || b == U'u' || b == U'y';
}

bool is_letter(char32_t cp) {
  const char32_t l = to_lower(cp);
  if (l >= U'a' && l <= U'z') return true;
  if (l >= 0xDF && l <= 0xFF && l != 0xF7) return true;
  return l >= 0x100 && l <= 0x17F;
}

bool has_written_accent(char32_t cp) {
  switch (to_lower(cp)) {
    case U'à': case U'á': case U'è': case U'é': case U'ì':
    case U'í': case U'ò': case U'ó': case U'ù': case U'ú':
      return true;
    default:
      return false;
  }
}

bool has_dieresis(char32_t cp) {
  switch (to_lower(cp)) {
    case U'ä': case U'ë': case U'ï': case U'ö': case U'ü': case U'ÿ':
      return true;
    default:
      return false;
  }
}

bool is_space(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\r' || cp == U'\n' || cp == U' ' || cp == U' ';
}

}  // namespace scansion::utf8
