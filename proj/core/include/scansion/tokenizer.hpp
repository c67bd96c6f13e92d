#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace scansion {

enum class TokenKind { Word, Punct };

struct Token {
  TokenKind kind = TokenKind::Word;
  // Slice of the normalized line, diacritics and apostrophes included.
  std::string surface;
  // Lexicon key (Word only).
  std::string key;
  // Punctuation glued to the word on either side (Word only).
  std::string leading_punct;
  std::string trailing_punct;
  // A single space preceded this token in the normalized line.
  bool space_before = false;

  friend bool operator==(const Token&, const Token&) = default;
};

// Unifies apostrophe variants to U+2019, turns single-quote quotations
// ('Beati ...' / ‘Beati ...’) into double quotes and collapses whitespace.
std::string normalize_line(std::string_view line);

// Splits a normalized line into Word and Punct tokens. Elided forms are
// separated from the following word ("d’un" -> "d’", "un"); apostrophes
// followed by a consonant stay inside the word ("acco’lo").
std::vector<Token> tokenize(std::string_view normalized_line);

// Case-folded surface; diacritics and apostrophes preserved.
std::string lex_key(const Token& token);
std::string lex_key(std::string_view surface);

// Surfaces joined with the recorded spacing; inverse of tokenize.
std::string reconstruct(const std::vector<Token>& tokens);

bool is_punctuation(char32_t cp);

}  // namespace scansion
