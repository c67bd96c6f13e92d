#include "scansion/tokenizer.hpp"

#include "scansion/utf8.hpp"

namespace scansion {

namespace {

bool is_word_char(char32_t cp) {
  return utf8::is_letter(cp) || utf8::is_apostrophe(cp) || (cp >= U'0' && cp <= U'9');
}

bool is_upper(char32_t cp) { return utf8::is_letter(cp) && utf8::to_lower(cp) != cp; }

// Index of the apostrophe closing a quotation opened at `open`, or npos.
std::size_t find_closing_quote(const std::u32string& s, std::size_t open) {
  for (std::size_t k = open + 1; k < s.size(); ++k) {
    if (!utf8::is_apostrophe(s[k])) continue;
    const bool letter_after = k + 1 < s.size() && utf8::is_letter(s[k + 1]);
    if (!letter_after) return k;
  }
  return std::u32string::npos;
}

}  // namespace

bool is_punctuation(char32_t cp) { return !is_word_char(cp) && !utf8::is_space(cp); }

std::string normalize_line(std::string_view line) {
  std::u32string s = utf8::decode(line);

  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != U'‘' && s[i] != U'\'') continue;
    const bool at_word_start = i == 0 || utf8::is_space(s[i - 1]) || is_punctuation(s[i - 1]);
    if (!at_word_start || i + 1 >= s.size() || !is_upper(s[i + 1])) continue;
    const auto close = find_closing_quote(s, i);
    if (close == std::u32string::npos) continue;
    s[i] = U'"';
    s[close] = U'"';
  }
  for (auto& cp : s)
    if (utf8::is_apostrophe(cp)) cp = utf8::kApostrophe;

  std::u32string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (char32_t cp : s) {
    if (utf8::is_space(cp)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(U' ');
    pending_space = false;
    out.push_back(cp);
  }
  return utf8::encode(out);
}

std::string lex_key(std::string_view surface) {
  auto cps = utf8::decode(surface);
  for (auto& cp : cps) cp = utf8::is_apostrophe(cp) ? utf8::kApostrophe : utf8::to_lower(cp);
  return utf8::encode(cps);
}

std::string lex_key(const Token& token) { return lex_key(token.surface); }

std::vector<Token> tokenize(std::string_view normalized_line) {
  const std::u32string s = utf8::decode(normalized_line);
  std::vector<Token> tokens;
  std::size_t i = 0;
  bool space = false;

  auto push_punct = [&](std::size_t b, std::size_t e) {
    Token t;
    t.kind = TokenKind::Punct;
    t.surface = utf8::encode(std::u32string_view(s).substr(b, e - b));
    t.space_before = space;
    space = false;
    tokens.push_back(std::move(t));
  };

  while (i < s.size()) {
    if (utf8::is_space(s[i])) {
      space = !tokens.empty();
      ++i;
      continue;
    }
    // One whitespace-delimited chunk: punctuation and word runs.
    std::size_t last_word = std::string::npos;  // token index of the latest word in this chunk
    std::string pending_leading;
    while (i < s.size() && !utf8::is_space(s[i])) {
      const std::size_t b = i;
      if (!is_word_char(s[i])) {
        while (i < s.size() && is_punctuation(s[i])) ++i;
        const std::string run = utf8::encode(std::u32string_view(s).substr(b, i - b));
        if (last_word != std::string::npos)
          tokens[last_word].trailing_punct += run;
        else
          pending_leading += run;
        push_punct(b, i);
        continue;
      }
      while (i < s.size() && is_word_char(s[i])) {
        // Elision: an apostrophe inside the run followed by a vowel (or h)
        // ends the current word.
        const bool cut = utf8::is_apostrophe(s[i]) && i > b && i + 1 < s.size() &&
                         (utf8::is_vowel(s[i + 1]) || utf8::to_lower(s[i + 1]) == U'h');
        ++i;
        if (cut) break;
      }
      Token t;
      t.kind = TokenKind::Word;
      t.surface = utf8::encode(std::u32string_view(s).substr(b, i - b));
      t.key = lex_key(t.surface);
      t.space_before = space;
      space = false;
      if (last_word == std::string::npos) t.leading_punct = std::move(pending_leading);
      tokens.push_back(std::move(t));
      last_word = tokens.size() - 1;
    }
  }
  return tokens;
}

std::string reconstruct(const std::vector<Token>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (t.space_before) out += ' ';
    out += t.surface;
  }
  return out;
}

}  // namespace scansion
