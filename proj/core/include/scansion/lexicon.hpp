#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace scansion {

// Propensity of a word boundary to take part in a synalephe: either a
// probability in [0,1] or the apostrophe sentinel, which melds with any
// neighbour.
class Propensity {
 public:
  constexpr Propensity() = default;

  // Throws ValidationError unless 0 <= x <= 1.
  static Propensity prob(double x);
  static constexpr Propensity apostrophe() {
    Propensity p;
    p.apostrophe_ = true;
    p.value_ = 1.0;
    return p;
  }

  constexpr bool is_apostrophe() const { return apostrophe_; }
  // Probability carried by a Prob value; 1 for the apostrophe sentinel.
  constexpr double value() const { return value_; }

  friend constexpr bool operator==(const Propensity& a, const Propensity& b) {
    return a.apostrophe_ == b.apostrophe_ && a.value_ == b.value_;
  }

 private:
  double value_ = 0.0;
  bool apostrophe_ = false;
};

// Literal "A" for the sentinel, shortest round-trip decimal otherwise.
std::string to_string(Propensity p);
Propensity parse_propensity(std::string_view text);

// Per-word metric record: left propensity, syllable count, accent offset
// (syllables from the right end, so 0 = last syllable), right propensity.
struct MetricTuple {
  Propensity left;
  int syllables = 1;
  int accent = 0;
  Propensity right;

  friend bool operator==(const MetricTuple&, const MetricTuple&) = default;
};

// One syllabification variant of a word.
struct WordAnalysis {
  MetricTuple tuple;
  std::vector<std::string> syllables;
  // Primary accent first, then any secondary accents.
  std::vector<int> accents;
  // Prior probability of this variant among the word's analyses.
  double weight = 1.0;

  int primary_accent() const { return accents.front(); }
  std::string syllabification() const;  // "sel|va"

  friend bool operator==(const WordAnalysis&, const WordAnalysis&) = default;
};

// Checks the per-analysis invariants; `form` is the (normalized) word the
// syllables must spell out. Throws ValidationError.
void validate_analysis(const WordAnalysis& analysis, std::string_view form);

// Checks a full analysis list for one key (non-empty, weights sum to 1).
void validate_analyses(std::string_view key, const std::vector<WordAnalysis>& analyses);

// Immutable word dictionary. Copies share storage; with_override() and
// friends return new values and never touch the receiver.
class Lexicon {
 public:
  using Entries = std::map<std::string, std::vector<WordAnalysis>, std::less<>>;
  using KeySet = std::set<std::string, std::less<>>;

  Lexicon();
  // Validates every entry. Throws ValidationError.
  Lexicon(Entries entries, KeySet stress_ineligible);

  // Throws UnknownWord.
  const std::vector<WordAnalysis>& lookup(std::string_view key) const;
  const std::vector<WordAnalysis>* find(std::string_view key) const noexcept;
  bool contains(std::string_view key) const noexcept { return find(key) != nullptr; }

  // False for monosyllables such as articles that never carry a metric accent.
  bool stress_eligible(std::string_view key) const noexcept;

  const Entries& entries() const noexcept { return *entries_; }
  const KeySet& stress_ineligible() const noexcept { return *ineligible_; }
  std::size_t size() const noexcept { return entries_->size(); }
  bool empty() const noexcept { return entries_->empty(); }

  Lexicon with_override(std::string key, std::vector<WordAnalysis> analyses) const;
  Lexicon with_stress_ineligible(KeySet keys) const;

  friend bool operator==(const Lexicon& a, const Lexicon& b) {
    return a.entries() == b.entries() && a.stress_ineligible() == b.stress_ineligible();
  }

 private:
  std::shared_ptr<const Entries> entries_;
  std::shared_ptr<const KeySet> ineligible_;
};

// Line-based lexicon file:
//   # comment
//   #!stress_ineligible<TAB>key<TAB>key...
//   key<TAB>weight<TAB>p_l<TAB>p_r<TAB>syl|la|bles<TAB>accent[,accent...]
// Throws ParseError (with line number) or ValidationError.
Lexicon parse_lexicon(std::string_view text);
std::string serialize_lexicon(const Lexicon& lex);

Lexicon load_lexicon_file(const std::string& path);

// True when `key` is already in normalized (case-folded, trimmed) form.
bool is_normalized_key(std::string_view key);

}  // namespace scansion
