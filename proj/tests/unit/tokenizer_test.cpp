#include <gtest/gtest.h>

#include "scansion/tokenizer.hpp"

namespace scansion {
namespace {

std::vector<std::string> words(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens)
    if (t.kind == TokenKind::Word) out.push_back(t.surface);
  return out;
}

TEST(NormalizeLine, ApostropheVariants) {
  EXPECT_EQ(normalize_line("Tant' è"), "Tant’ è");
  EXPECT_EQ(normalize_line("Tant’ è"), "Tant’ è");
  EXPECT_EQ(normalize_line("Tantʼ è"), "Tant’ è");
}

TEST(NormalizeLine, AphaeresisKept) {
  EXPECT_EQ(normalize_line("E noi lasciammo lor così ‘mpacciati."), "E noi lasciammo lor così ’mpacciati.");
}

TEST(NormalizeLine, QuotationBecomesDouble) {
  EXPECT_EQ(normalize_line("e ‘Beati misericordes!’ fue"), "e \"Beati misericordes!\" fue");
  EXPECT_EQ(normalize_line("'Glorïa in excelsis' tutti 'Deo'"), "\"Glorïa in excelsis\" tutti \"Deo\"");
}

TEST(NormalizeLine, WhitespaceAndIdentity) {
  EXPECT_EQ(normalize_line("  Nel   mezzo\tdel  "), "Nel mezzo del");
  EXPECT_EQ(normalize_line("Nel mezzo del cammin di nostra vita"), "Nel mezzo del cammin di nostra vita");
}

TEST(Tokenize, PunctuationIsContext) {
  const auto t = tokenize("per simil colpa». E più non fé parola.");
  EXPECT_EQ(words(t), (std::vector<std::string>{"per", "simil", "colpa", "E", "più", "non", "fé", "parola"}));
  const auto colpa = std::find_if(t.begin(), t.end(), [](const Token& x) { return x.surface == "colpa"; });
  ASSERT_NE(colpa, t.end());
  EXPECT_EQ(colpa->trailing_punct, "».");
  EXPECT_EQ(t.back().kind, TokenKind::Punct);
}

TEST(Tokenize, Elision) {
  EXPECT_EQ(words(tokenize("Tant’ è amara")), (std::vector<std::string>{"Tant’", "è", "amara"}));
  EXPECT_EQ(words(tokenize("d’un colle")), (std::vector<std::string>{"d’", "un", "colle"}));
  EXPECT_EQ(words(tokenize("ch’i’ vi")), (std::vector<std::string>{"ch’", "i’", "vi"}));
  EXPECT_EQ(words(tokenize("lo ’mpedisce")), (std::vector<std::string>{"lo", "’mpedisce"}));
  EXPECT_EQ(words(tokenize("acco’lo")), (std::vector<std::string>{"acco’lo"}));
  EXPECT_EQ(words(tokenize("ver’ me")), (std::vector<std::string>{"ver’", "me"}));
}

TEST(Tokenize, LeadingGuillemet) {
  const auto t = tokenize("«Miserere di me», gridai a lui,");
  ASSERT_GE(t.size(), 2u);
  EXPECT_EQ(t[0].kind, TokenKind::Punct);
  EXPECT_EQ(t[0].surface, "«");
  EXPECT_EQ(t[1].surface, "Miserere");
  EXPECT_EQ(t[1].leading_punct, "«");
}

TEST(Tokenize, Empty) { EXPECT_TRUE(tokenize("").empty()); }

TEST(Tokenize, Reconstruct) {
  for (const char* line : {"«Miserere di me», gridai a lui,", "Tant’ è amara che poco è più morte;",
                           "mi:«Non omo, omo già fui,", "e \"Beati misericordes!\" fue"}) {
    EXPECT_EQ(reconstruct(tokenize(line)), line);
  }
}

TEST(LexKey, CaseFoldKeepsDiacritics) {
  EXPECT_EQ(lex_key("Nel"), "nel");
  EXPECT_EQ(lex_key("Bëatrice"), "bëatrice");
  EXPECT_NE(lex_key("Bëatrice"), lex_key("Beatrice"));
  EXPECT_EQ(lex_key("ch’"), "ch’");
  EXPECT_EQ(lex_key("È"), "è");
}

}  // namespace
}  // namespace scansion
