#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "scansion/lexicon.hpp"
#include "scansion/scander.hpp"

namespace scansion::testing {

struct PropertyResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0; }
  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

// Each suite runs `cases` randomized cases from a fixed seed.
PropertyResult lexicon_round_trip(int cases, std::uint32_t seed = 1);
PropertyResult tokenizer_reconstruction(int cases, std::uint32_t seed = 2);
PropertyResult rendering_round_trip(const Lexicon& lex, int cases, std::uint32_t seed = 3);
PropertyResult flag_soundness(int cases, std::uint32_t seed = 4);
PropertyResult determinism(const Lexicon& lex, int cases, std::uint32_t seed = 5);

// Engine (pruning off) against enumerate_all on up to `sample` fixture
// verses with at most `max_tokens` words.
PropertyResult oracle_equivalence(const Lexicon& lex, const std::vector<std::string>& verses, int sample,
                                  std::size_t max_tokens, double tolerance, std::uint32_t seed = 6);

// Per-word likelihood sums stay at 1 with pruning off.
PropertyResult likelihood_conservation(const Lexicon& lex, const std::vector<std::string>& verses,
                                       double tolerance);

// Bars and whitespace removed.
std::string strip_rendering(const std::string& text);

// Engine state set for a verse through the analysis-only advance overload.
std::vector<OracleState> engine_states(const Lexicon& lex, const std::string& verse);
std::vector<OracleWord> oracle_words(const Lexicon& lex, const std::string& verse);

}  // namespace scansion::testing
