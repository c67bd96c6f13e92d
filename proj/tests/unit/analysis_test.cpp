#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "scansion/analysis.hpp"
#include "scansion/errors.hpp"

namespace scansion {
namespace {

using testing::seed_lexicon;

const ScanReport& canto_one_report() {
  static const ScanReport r = scan_document(testing::canto_one(), seed_lexicon());
  return r;
}

const ScanReport& quoted_report() {
  static const ScanReport r = scan_document(testing::quoted_document(), seed_lexicon());
  return r;
}

// Hand oracle: primary accent positions recomputed from the rendered syllables.
std::string hand_pattern(const ScanState& s, const Lexicon& lex) {
  std::string out(static_cast<std::size_t>(s.count), '-');
  for (const WordStep* step : s.steps()) {
    if (!lex.stress_eligible(step->word->key)) continue;
    const int p = step->end_count + step->word->analyses[step->analysis_index].accents.front();
    if (p >= 1 && p <= s.count) out[static_cast<std::size_t>(p - 1)] = '+';
  }
  return out;
}

TEST(ClassifyWord, PortoBothWays) {
  const auto occ = classify_word("portò", quoted_report());
  ASSERT_EQ(occ.size(), 2u);
  EXPECT_EQ(occ[0].location, (Location{"Inferno", 22, 72}));
  EXPECT_EQ(occ[0].outcome, Outcome::Synalephe);
  EXPECT_EQ(occ[0].neighbor, "un");
  EXPECT_EQ(occ[0].side, Side::Right);
  EXPECT_EQ(occ[1].location, (Location{"Inferno", 27, 124}));
  EXPECT_EQ(occ[1].outcome, Outcome::Dialephe);
  EXPECT_EQ(occ[1].neighbor, "e");
}

TEST(ClassifyWord, NeverListAlwaysDialephe) {
  // the quoted "tra" verses only meet consonants, so "te è" carries the vowel contact
  for (const auto* key : {"tra", "te"}) {
    for (const auto& o : classify_word(key, quoted_report()))
      EXPECT_EQ(o.outcome, Outcome::Dialephe) << key << " " << to_string(o.location);
  }
  const auto te = classify_word("te", quoted_report());
  ASSERT_FALSE(te.empty());
  EXPECT_EQ(te[0].location, (Location{"Purgatorio", 27, 36}));
  EXPECT_EQ(te[0].neighbor, "è");
}

TEST(ClassifyWord, AbsentKey) { EXPECT_TRUE(classify_word("xyzzy", canto_one_report()).empty()); }

TEST(ClassifyWord, AgreesWithRendering) {
  // "selva oscura" in line 2 is rendered melded
  const auto occ = classify_word("oscura", canto_one_report());
  ASSERT_FALSE(occ.empty());
  EXPECT_EQ(occ[0].location.line, 2);
  EXPECT_EQ(occ[0].outcome, Outcome::Synalephe);
  EXPECT_EQ(occ[0].side, Side::Left);
}

TEST(AccentPattern, NelMezzo) {
  const auto v = scan_text("Nel mezzo del cammin di nostra vita", seed_lexicon());
  const auto p = accent_pattern(v, seed_lexicon());
  EXPECT_EQ(p.rendered, "-+---+-+-+-");
  EXPECT_EQ(p.rendered, hand_pattern(*v.chosen, seed_lexicon()));
}

TEST(AccentPattern, OneWord) {
  const auto v = scan_text("selva", seed_lexicon(), ScanConfig{.require_a10 = false});
  EXPECT_EQ(accent_pattern(v, seed_lexicon()).rendered, "+-");
}

TEST(AccentPattern, SecondaryOnRequest) {
  const auto v = scan_text("con tre gole caninamente latra", seed_lexicon());
  const auto plain = accent_pattern(v, seed_lexicon());
  const auto both = accent_pattern(v, seed_lexicon(), true);
  EXPECT_EQ(plain.rendered[5], '-');
  EXPECT_EQ(both.rendered[5], '+');
}

TEST(AccentPattern, NoChosenIsError) {
  EXPECT_THROW(accent_pattern(VerseScansion(), seed_lexicon()), ScansionError);
}

TEST(AccentPattern, TenthAlwaysStressedOnOkVerses) {
  for (const auto& r : canto_one_report().verses) {
    if (r.scansion.status != ScanStatus::Ok) continue;
    const auto p = accent_pattern(r.scansion, seed_lexicon());
    EXPECT_EQ(p.rendered[9], '+') << r.location.line;
    EXPECT_EQ(p.rendered, hand_pattern(*r.scansion.chosen, seed_lexicon())) << r.location.line;
  }
}

TEST(Pattern, ParseRoundTrip) {
  EXPECT_EQ(parse_pattern("-+---+-+-+-").rendered, "-+---+-+-+-");
  EXPECT_THROW(parse_pattern("-x-"), ValidationError);
}

TEST(MetricUnits, Examples) {
  EXPECT_EQ(metric_units(parse_pattern("-+---+-+-+-")), "1/4/2/2/2/");
  EXPECT_EQ(metric_units(parse_pattern("+++")), "1/1/1/");
  EXPECT_EQ(metric_units(parse_pattern("----+")), "4/1/");
  EXPECT_EQ(metric_units(parse_pattern("+-")), "2/");
  EXPECT_THROW(metric_units(parse_pattern("---")), ValidationError);
}

TEST(Histogram, CantoOneSums) {
  const auto h = pattern_histogram(canto_one_report(), seed_lexicon());
  int total = 0;
  for (const auto& [k, v] : h) total += v;
  EXPECT_EQ(total, 136);
}

TEST(Histogram, EmptyAndDuplicates) {
  EXPECT_TRUE(pattern_histogram(ScanReport(), seed_lexicon()).empty());
  const auto doc = parse_corpus(
      "Inferno: Canto I\n\nNel mezzo del cammin di nostra vita\nNel mezzo del cammin di nostra vita\n");
  const auto h = pattern_histogram(scan_document(doc, seed_lexicon()), seed_lexicon());
  ASSERT_EQ(h.size(), 1u);
  EXPECT_EQ(h.at("-+---+-+-+-"), 2);
}

TEST(Histogram, SortedOrder) {
  const std::map<std::string, int> h{{"-+-", 2}, {"+--", 2}, {"--+", 5}};
  const auto s = sorted_histogram(h);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0].first, "--+");
  EXPECT_EQ(s[1].first, "+--");
  EXPECT_EQ(s[2].first, "-+-");
  EXPECT_EQ(histogram_tsv(h), "pattern\tunits\tcount\n--+\t2/1/\t5\n+--\t3/\t2\n-+-\t1/2/\t2\n");
}

TEST(Occurrences, Tsv) {
  const auto occ = classify_word("portò", quoted_report());
  const auto tsv = occurrences_tsv(occ);
  EXPECT_NE(tsv.find("Inferno\tXXII\t72\tportò\tright\tsynalephe\tun"), std::string::npos) << tsv;
}

}  // namespace
}  // namespace scansion
