#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scansion/lexicon.hpp"

namespace scansion {

// A hand-specified syllabification for a word that admits more than one
// reading (e.g. "creature" with and without hiatus).
struct VariantSpec {
  std::vector<std::string> syllables;
  // Empty means "computed by locate_accent".
  std::vector<int> accents;
  double weight = 1.0;

  friend bool operator==(const VariantSpec&, const VariantSpec&) = default;
};

struct RuleConfig {
  std::set<std::string, std::less<>> never_synalephe_monosyllables;
  // key -> (p_l, p_r)
  std::map<std::string, std::pair<double, double>, std::less<>> probabilistic_monosyllables;
  double accented_final_default_p_r = 0.1;
  // Propensity on the side of a word that ends (stressed) or starts with a
  // vowel cluster.
  double diphthong_boundary_p = 0.0;
  // Words whose vowel groups are all read as hiatus.
  std::set<std::string, std::less<>> hiatus_exception_words;
  std::set<char32_t> dieresis_characters;
  // Words with several analyses; weights per key sum to 1.
  std::map<std::string, std::vector<VariantSpec>, std::less<>> variants;
  // Copied into built lexicons.
  Lexicon::KeySet stress_ineligible;

  // The built-in defaults: both monosyllable lists, 0.1 / 0 propensities,
  // ä ë ï ö ü ÿ (either case) as dieresis marks, no hiatus words.
  static RuleConfig defaults();

  // Throws ValidationError.
  void validate() const;
};

// Line-based TAB-separated config. Directives:
//   never <w>...             probabilistic <w> <p_l> <p_r>
//   accented_final_p_r <p>   diphthong_boundary_p <p>
//   dieresis <c>...          hiatus <w>...
//   hiatus_file <path>       variant <w> <weight> <syl|la|bles> [<accents>]
//   ineligible <w>...
// Starts from RuleConfig::defaults(); "never", "probabilistic" and
// "dieresis" lines replace the corresponding default set on first use.
// Relative hiatus_file paths resolve against `base_dir`.
RuleConfig parse_rule_config(std::string_view text, const std::string& base_dir = ".");
RuleConfig load_rule_config(const std::string& path);

// One word per line (first field), '#' comments; keys are lower-cased.
std::set<std::string, std::less<>> parse_word_list(std::string_view text);

struct SyllableSplit {
  std::vector<std::string> syllables;
  // Set when the form had no vowel and no apostrophe.
  bool fallback = false;
};

// Throws ValidationError on an empty form.
SyllableSplit split_syllables(std::string_view form, const RuleConfig& cfg);

// Primary accent offset first, then the secondary accent of -mente adverbs.
std::vector<int> locate_accent(std::string_view form, const std::vector<std::string>& syllables,
                               const RuleConfig& cfg = RuleConfig::defaults());

// (p_l, p_r); the primary accent is taken from locate_accent.
std::pair<Propensity, Propensity> init_propensities(std::string_view form,
                                                    const std::vector<std::string>& syllables,
                                                    const RuleConfig& cfg);
std::pair<Propensity, Propensity> init_propensities(std::string_view form,
                                                    const std::vector<std::string>& syllables,
                                                    int primary_accent, const RuleConfig& cfg);

// Analyses for the lower-cased form.
std::vector<WordAnalysis> build_analyses(std::string_view form, const RuleConfig& cfg);

// Rule-built entries for every word, then every entry of `overrides`
// replaces (or adds) its key. Stress-ineligible keys come from the config
// and the overrides.
Lexicon build_lexicon(const std::set<std::string, std::less<>>& words, const RuleConfig& cfg,
                      const Lexicon& overrides = Lexicon());

}  // namespace scansion
