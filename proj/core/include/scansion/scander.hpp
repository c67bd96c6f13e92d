#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "scansion/lexicon.hpp"
#include "scansion/tokenizer.hpp"

namespace scansion {

// Probability that two adjacent boundaries meld: 1 if either side is the
// apostrophe sentinel, the product of the probabilities otherwise.
double meld_probability(Propensity p_r, Propensity p_l);

// A word ready to be scanned: its token position and analyses, plus the
// analyses' syllables re-spelled with the surface capitalisation.
struct ScanWord {
  std::size_t token_index = 0;
  std::string key;
  std::vector<WordAnalysis> analyses;
  std::vector<std::vector<std::string>> surface_syllables;  // one per analysis
  bool stress_eligible = true;
};

// Choice made for one word along a scan path.
struct WordStep {
  std::shared_ptr<const WordStep> prev;
  std::shared_ptr<const ScanWord> word;
  std::size_t analysis_index = 0;
  bool melded = false;
  // Syllable count after this word.
  int end_count = 0;
};

struct ScanState {
  double likelihood = 1.0;
  int count = 0;
  Propensity pending_p_r = Propensity::prob(0.0);
  bool a4 = false;
  bool a6 = false;
  bool a10 = false;
  std::optional<std::size_t> accent10_word_index;
  int words_after_accent10 = 0;
  std::shared_ptr<const WordStep> trail;

  // Oldest first.
  std::vector<const WordStep*> steps() const;
  // Rendered syllables; melded syllables contain one internal space.
  std::vector<std::string> syllables() const;
  // Leading-bar text without punctuation: "|sel|va o|scu|ra".
  std::string text() const;
};

struct ScanConfig {
  bool require_a10 = true;
  bool prefer_a4_or_a6 = true;
  int max_total_syllables = 11;
  double likelihood_floor = 1e-9;
  double tie_epsilon = 1e-12;
  // Off: neither the likelihood floor nor the trailing-word rule prunes
  // during advance (the final admissibility filter still applies).
  bool pruning = true;

  void validate() const;  // throws ValidationError
};

enum class ScanStatus { Ok, WarnNoCaesura, FailNoAccent10, FailUnknownWord };

const char* to_string(ScanStatus s);

struct VerseScansion {
  std::optional<ScanState> chosen;
  // Descending likelihood, chosen first.
  std::vector<ScanState> admissible;
  // Every final state, in generation order.
  std::vector<ScanState> candidates;
  ScanStatus status = ScanStatus::FailNoAccent10;
  // Most likely state overall when nothing is admissible.
  std::optional<ScanState> diagnostic;
  // Keys missing from the lexicon (FailUnknownWord).
  std::vector<std::string> unknown_words;

  bool ok() const { return status == ScanStatus::Ok || status == ScanStatus::WarnNoCaesura; }
};

ScanState initial_state();

// Builds the ScanWord for a Word token. Throws UnknownWord.
ScanWord prepare_word(const Token& token, std::size_t token_index, const Lexicon& lex);

std::vector<ScanState> advance(const std::vector<ScanState>& states,
                               const std::shared_ptr<const ScanWord>& word, const ScanConfig& cfg);
// Convenience form without surface information (syllables come from the
// analyses, key is empty).
std::vector<ScanState> advance(const std::vector<ScanState>& states,
                               const std::vector<WordAnalysis>& analyses, std::size_t token_index,
                               bool stress_eligible, const ScanConfig& cfg);

VerseScansion finalize(std::vector<ScanState> states, const ScanConfig& cfg);

VerseScansion scan_verse(const std::vector<Token>& tokens, const Lexicon& lex,
                         const ScanConfig& cfg = ScanConfig());

// normalize_line + tokenize + scan_verse.
VerseScansion scan_text(std::string_view line, const Lexicon& lex, const ScanConfig& cfg = ScanConfig());

// Leading-bar rendering with punctuation restored from `tokens`.
std::string render_state(const ScanState& state, const std::vector<Token>& tokens);

}  // namespace scansion
