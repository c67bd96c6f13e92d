#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scansion/corpus.hpp"
#include "scansion/lexicon.hpp"
#include "scansion/scander.hpp"

namespace scansion {

enum class Side { Left, Right };
enum class Outcome { Synalephe, Dialephe };

const char* to_string(Side s);
const char* to_string(Outcome o);

// One word boundary with vowel contact, as resolved in a chosen scansion.
struct Occurrence {
  Location location;
  std::string key;
  Side side = Side::Left;
  Outcome outcome = Outcome::Dialephe;
  std::string neighbor;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

// Every boundary of `key` that touches a vowel (or apostrophe) on both sides.
std::vector<Occurrence> classify_word(std::string_view key, const ScanReport& report);

struct AccentPattern {
  std::vector<bool> positions;  // index 0 = first syllable
  std::string rendered;         // '-' / '+'

  friend bool operator==(const AccentPattern&, const AccentPattern&) = default;
};

AccentPattern make_pattern(std::vector<bool> positions);
// Inverse of AccentPattern::rendered. Throws ValidationError on other chars.
AccentPattern parse_pattern(std::string_view rendered);

// Primary accents of stress-eligible words in the chosen state (secondary
// ones too when asked). Throws ScansionError when nothing was chosen.
AccentPattern accent_pattern(const VerseScansion& scansion, const Lexicon& lex, bool include_secondary = false);

// Segment lengths: the unstressed lead (when present), then one segment per
// stress running up to the next stress or the end of the verse.
// "-+---+-+-+-" -> "1/4/2/2/2/". Throws ValidationError without stresses.
std::string metric_units(const AccentPattern& pattern);

// Over the chosen states of Ok verses.
std::map<std::string, int> pattern_histogram(const ScanReport& report, const Lexicon& lex);
// Descending count, then lexicographic.
std::vector<std::pair<std::string, int>> sorted_histogram(const std::map<std::string, int>& histogram);

std::string histogram_tsv(const std::map<std::string, int>& histogram);
std::string occurrences_tsv(const std::vector<Occurrence>& occurrences);

}  // namespace scansion
