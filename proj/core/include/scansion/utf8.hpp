#pragma once

// Minimal UTF-8 and Italian-orthography helpers. Only the Latin-1
// supplement and a handful of punctuation code points matter for the
// corpus, so no ICU dependency.

#include <string>
#include <string_view>
#include <vector>

namespace scansion::utf8 {

inline constexpr char32_t kApostrophe = U'’';
inline constexpr std::string_view kApostropheUtf8 = "’";

std::u32string decode(std::string_view text);
std::string encode(std::u32string_view text);
std::string encode(char32_t cp);

// Number of code points; invalid sequences count as one each.
std::size_t length(std::string_view text);

char32_t to_lower(char32_t cp);
std::string to_lower(std::string_view text);

// Any apostrophe-like mark (’ ' ʼ ‘ ´ are all accepted on input).
bool is_apostrophe(char32_t cp);
bool is_vowel(char32_t cp);
bool is_letter(char32_t cp);
// à è é ì í ò ó ù ú (either case).
bool has_written_accent(char32_t cp);
// ä ë ï ö ü ÿ (either case).
bool has_dieresis(char32_t cp);
// Vowel with diacritics stripped, lower case; identity for other input.
char32_t base_vowel(char32_t cp);

bool is_space(char32_t cp);

}  // namespace scansion::utf8
