#include "scansion/wordrules.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>

#include "scansion/errors.hpp"
#include "scansion/utf8.hpp"
#include "text_util.hpp"

namespace scansion {

namespace {

enum class Cls { Vowel, Apostrophe, Consonant };

bool is_plain_i(char32_t c) { return c == U'i'; }

bool valid_onset(std::u32string_view s) {
  if (s.empty()) return true;
  if (s.size() == 1) return true;
  if (s.front() == U's') {
    const auto rest = s.substr(1);
    return rest.front() != U's' && valid_onset(rest);
  }
  if (s.size() != 2) return false;
  const char32_t a = s[0], b = s[1];
  if ((b == U'l' || b == U'r') && std::u32string_view(U"bcdfgpt").find(a) != std::u32string_view::npos)
    return true;
  if (b == U'h' && (a == U'c' || a == U'g' || a == U'p' || a == U't')) return true;
  if (a == U'g' && (b == U'n' || b == U'l')) return true;
  if (a == U'p' && (b == U's' || b == U'n')) return true;
  return a == U'q' && b == U'u';
}

struct Classified {
  std::u32string cps;
  std::u32string low;
  std::vector<Cls> cls;
};

Classified classify(std::string_view form) {
  Classified c;
  c.cps = utf8::decode(form);
  c.low.reserve(c.cps.size());
  for (char32_t cp : c.cps) c.low.push_back(utf8::to_lower(cp));
  const std::size_t n = c.cps.size();
  c.cls.resize(n, Cls::Consonant);
  for (std::size_t i = 0; i < n; ++i) {
    const char32_t l = c.low[i];
    if (utf8::is_apostrophe(l)) {
      c.cls[i] = Cls::Apostrophe;
    } else if (utf8::is_vowel(l)) {
      const bool qu = l == U'u' && i > 0 && c.low[i - 1] == U'q' && i + 1 < n && utf8::is_vowel(c.low[i + 1]);
      c.cls[i] = qu ? Cls::Consonant : Cls::Vowel;
    }
  }
  return c;
}

bool has_dieresis_mark(char32_t cp, const RuleConfig& cfg) {
  return cfg.dieresis_characters.count(cp) > 0 || cfg.dieresis_characters.count(utf8::to_lower(cp)) > 0;
}

// Half-open code point ranges of syllable nuclei.
std::vector<std::pair<std::size_t, std::size_t>> find_nuclei(const Classified& c, bool hiatus_word,
                                                             const RuleConfig& cfg) {
  std::vector<std::pair<std::size_t, std::size_t>> nuclei;
  const std::size_t n = c.cps.size();
  std::size_t i = 0;
  while (i < n) {
    if (c.cls[i] == Cls::Apostrophe) {
      const bool after_vowel = i > 0 && c.cls[i - 1] == Cls::Vowel;
      const bool before_vowel = i + 1 < n && c.cls[i + 1] == Cls::Vowel;
      if (!after_vowel && !before_vowel) nuclei.emplace_back(i, i + 1);
      ++i;
      continue;
    }
    if (c.cls[i] != Cls::Vowel) {
      ++i;
      continue;
    }
    // Vowel run; a silent h between two vowels does not break it.
    std::vector<std::size_t> vowels{i};
    std::size_t j = i + 1;
    while (j < n) {
      if (c.cls[j] == Cls::Vowel) {
        vowels.push_back(j++);
      } else if (c.low[j] == U'h' && j + 1 < n && c.cls[j + 1] == Cls::Vowel) {
        ++j;
      } else {
        break;
      }
    }
    std::size_t start = i;
    for (std::size_t k = 0; k + 1 < vowels.size(); ++k) {
      const std::size_t p = vowels[k], q = vowels[k + 1];
      // Even in hiatus words, ggi / initial gi + vowel and a word-initial i + vowel stay together
      // (viag|gio, gio|vï|al, Iu|sti|nia|no); a single inner g does not (re|li|gi|o|ne).
      const bool soft_g = p >= 1 && c.low[p - 1] == U'g' && (p == 1 || c.low[p - 2] == U'g');
      const bool glide = is_plain_i(c.low[p]) && (p == 0 || soft_g);
      bool split = (hiatus_word && !glide) || has_dieresis_mark(c.cps[p], cfg) || has_dieresis_mark(c.cps[q], cfg);
      // Intervocalic i opens a syllable: no|ia, a|iu|ta.
      if (!split && is_plain_i(c.low[q]) && k + 2 < vowels.size()) split = true;
      if (split) {
        nuclei.emplace_back(start, p + 1);
        start = p + 1;
      }
    }
    nuclei.emplace_back(start, j);
    i = j;
  }
  return nuclei;
}

std::size_t cluster_split(const Classified& c, std::size_t begin, std::size_t end) {
  // An apostrophe right after a vowel stays with that vowel (acco’|lo).
  while (begin < end && c.cls[begin] == Cls::Apostrophe) ++begin;
  for (std::size_t k = begin; k < end; ++k) {
    if (valid_onset(std::u32string_view(c.low).substr(k, end - k))) return k;
  }
  return end;
}

bool ends_with(std::u32string_view s, std::u32string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

RuleConfig RuleConfig::defaults() {
  RuleConfig cfg;
  cfg.never_synalephe_monosyllables = {"be", "me", "fa", "fo", "mo", "po", "pro",
                                       "qua", "re", "sto", "te", "tu", "tra", "tre"};
  for (const char* w : {"a", "ad", "e", "io", "ho", "ha", "o"})
    cfg.probabilistic_monosyllables[w] = {0.9, 0.2};
  for (const char* w : {"che", "chi", "da", "fra", "fu", "ma", "qui", "se", "su", "va"})
    cfg.probabilistic_monosyllables[w] = {0.5, 0.1};
  cfg.dieresis_characters = {U'ä', U'ë', U'ï', U'ö', U'ü', U'ÿ', U'Ä', U'Ë', U'Ï', U'Ö', U'Ü'};
  return cfg;
}

void RuleConfig::validate() const {
  auto check_p = [](double p, const std::string& what) {
    if (!(p >= 0.0 && p <= 1.0)) throw ValidationError(what + " outside [0,1]");
  };
  for (const auto& w : never_synalephe_monosyllables)
    if (probabilistic_monosyllables.count(w))
      throw ValidationError("monosyllable '" + w + "' is in both the never and probabilistic lists");
  for (const auto& [w, p] : probabilistic_monosyllables) {
    check_p(p.first, "p_l of " + w);
    check_p(p.second, "p_r of " + w);
  }
  check_p(accented_final_default_p_r, "accented_final_p_r");
  check_p(diphthong_boundary_p, "diphthong_boundary_p");
  for (const auto& [w, specs] : variants) {
    if (specs.empty()) throw ValidationError("variant list for " + w + " is empty");
    double sum = 0;
    for (const auto& s : specs) {
      std::string joined;
      for (const auto& syl : s.syllables) joined += syl;
      if (joined != w) throw ValidationError("variant syllables do not spell " + w);
      sum += s.weight;
    }
    if (std::abs(sum - 1.0) > 1e-9) throw ValidationError("variant weights for " + w + " do not sum to 1");
  }
}

std::set<std::string, std::less<>> parse_word_list(std::string_view text) {
  std::set<std::string, std::less<>> out;
  for (auto line : detail::lines(text)) {
    line = detail::trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto end = line.find_first_of(" \t");
    out.insert(utf8::to_lower(line.substr(0, end)));
  }
  return out;
}

RuleConfig parse_rule_config(std::string_view text, const std::string& base_dir) {
  RuleConfig cfg = RuleConfig::defaults();
  bool never_seen = false, prob_seen = false, dieresis_seen = false;
  const auto all = detail::lines(text);
  for (std::size_t i = 0; i < all.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto line = detail::trim(all[i]);
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string_view> f;
    for (auto part : detail::split(line, '\t'))
      if (!part.empty()) f.push_back(detail::trim(part));
    const auto directive = f.front();
    auto need = [&](std::size_t count) {
      if (f.size() != count)
        throw ParseError(std::string(directive) + " expects " + std::to_string(count - 1) + " fields", line_no);
    };
    auto prob = [&](std::string_view s) {
      const auto v = detail::parse_double(s);
      if (!v) throw ParseError("bad number '" + std::string(s) + "'", line_no);
      return *v;
    };

    if (directive == "never") {
      if (!never_seen) cfg.never_synalephe_monosyllables.clear();
      never_seen = true;
      for (std::size_t k = 1; k < f.size(); ++k) cfg.never_synalephe_monosyllables.insert(utf8::to_lower(f[k]));
    } else if (directive == "probabilistic") {
      need(4);
      if (!prob_seen) cfg.probabilistic_monosyllables.clear();
      prob_seen = true;
      cfg.probabilistic_monosyllables[utf8::to_lower(f[1])] = {prob(f[2]), prob(f[3])};
    } else if (directive == "accented_final_p_r") {
      need(2);
      cfg.accented_final_default_p_r = prob(f[1]);
    } else if (directive == "diphthong_boundary_p") {
      need(2);
      cfg.diphthong_boundary_p = prob(f[1]);
    } else if (directive == "dieresis") {
      if (!dieresis_seen) cfg.dieresis_characters.clear();
      dieresis_seen = true;
      for (std::size_t k = 1; k < f.size(); ++k)
        for (char32_t cp : utf8::decode(f[k])) cfg.dieresis_characters.insert(cp);
    } else if (directive == "hiatus") {
      for (std::size_t k = 1; k < f.size(); ++k) cfg.hiatus_exception_words.insert(utf8::to_lower(f[k]));
    } else if (directive == "hiatus_file") {
      need(2);
      std::filesystem::path p{std::string(f[1])};
      if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
      for (auto& w : parse_word_list(detail::read_file(p.string()))) cfg.hiatus_exception_words.insert(w);
    } else if (directive == "variant") {
      if (f.size() != 4 && f.size() != 5) throw ParseError("variant expects 3 or 4 fields", line_no);
      VariantSpec spec;
      spec.weight = prob(f[2]);
      for (auto s : detail::split(f[3], '|')) spec.syllables.push_back(utf8::to_lower(s));
      if (f.size() == 5) {
        for (auto s : detail::split(f[4], ',')) {
          const auto v = detail::parse_long(s);
          if (!v) throw ParseError("bad accent list", line_no);
          spec.accents.push_back(static_cast<int>(*v));
        }
      }
      cfg.variants[utf8::to_lower(f[1])].push_back(std::move(spec));
    } else if (directive == "ineligible") {
      for (std::size_t k = 1; k < f.size(); ++k) cfg.stress_ineligible.insert(utf8::to_lower(f[k]));
    } else {
      throw ParseError("unknown directive '" + std::string(directive) + "'", line_no);
    }
  }
  cfg.validate();
  return cfg;
}

RuleConfig load_rule_config(const std::string& path) {
  const auto dir = std::filesystem::path(path).parent_path();
  return parse_rule_config(detail::read_file(path), dir.empty() ? "." : dir.string());
}

SyllableSplit split_syllables(std::string_view form, const RuleConfig& cfg) {
  if (form.empty()) throw ValidationError("cannot syllabify an empty form");
  const Classified c = classify(form);
  const bool hiatus_word = cfg.hiatus_exception_words.count(utf8::encode(c.low)) > 0;
  const auto nuclei = find_nuclei(c, hiatus_word, cfg);

  SyllableSplit out;
  if (nuclei.empty()) {
    out.syllables.emplace_back(form);
    out.fallback = true;
    return out;
  }
  std::size_t start = 0;
  for (std::size_t k = 0; k + 1 < nuclei.size(); ++k) {
    const std::size_t cut = cluster_split(c, nuclei[k].second, nuclei[k + 1].first);
    out.syllables.push_back(utf8::encode(std::u32string_view(c.cps).substr(start, cut - start)));
    start = cut;
  }
  out.syllables.push_back(utf8::encode(std::u32string_view(c.cps).substr(start)));
  return out;
}

std::vector<int> locate_accent(std::string_view form, const std::vector<std::string>& syllables,
                               const RuleConfig& cfg) {
  const int n = static_cast<int>(syllables.size());
  if (n <= 1) return {0};

  for (int k = n - 1; k >= 0; --k) {
    for (char32_t cp : utf8::decode(syllables[k]))
      if (utf8::has_written_accent(cp)) return {k - (n - 1)};
  }

  const std::u32string low = utf8::decode(utf8::to_lower(form));
  if (low.empty()) return {0};
  const char32_t last = low.back();

  if (utf8::is_apostrophe(last)) return {-1};
  if (!utf8::is_vowel(last)) {
    // Truncated forms are oxytone, except the -bile family (mirabil, simil).
    for (const auto* suffix : {U"bil", U"mil", U"cil", U"gil"})
      if (ends_with(low, suffix)) return {-1};
    return {0};
  }

  std::vector<int> accents{-1};
  const std::u32string tail = utf8::decode(utf8::to_lower(syllables.back()));
  if (tail.size() >= 2 && utf8::is_vowel(tail[tail.size() - 2])) {
    // A falling diphthong at the end (guardài, avèa, costùi) carries the stress.
    const char32_t v1 = utf8::base_vowel(tail[tail.size() - 2]);
    const char32_t before = tail.size() >= 3 ? tail[tail.size() - 3] : U' ';
    if (v1 == U'a' || v1 == U'e' || v1 == U'o' || (v1 == U'u' && before != U'g' && before != U'q'))
      accents[0] = 0;
  }

  if (n >= 4 && ends_with(low, U"mente")) {
    const std::string stem(form.substr(0, form.size() - 5));
    const auto stem_split = split_syllables(stem, cfg);
    if (static_cast<int>(stem_split.syllables.size()) == n - 2) {
      const int secondary = locate_accent(stem, stem_split.syllables, cfg).front() - 2;
      if (secondary != accents[0] && secondary >= -(n - 1)) accents.push_back(secondary);
    }
  }
  return accents;
}

std::pair<Propensity, Propensity> init_propensities(std::string_view form,
                                                    const std::vector<std::string>& syllables,
                                                    const RuleConfig& cfg) {
  return init_propensities(form, syllables, locate_accent(form, syllables, cfg).front(), cfg);
}

std::pair<Propensity, Propensity> init_propensities(std::string_view form,
                                                    const std::vector<std::string>& syllables,
                                                    int primary_accent, const RuleConfig& cfg) {
  const std::string key = utf8::to_lower(form);
  const std::u32string cps = utf8::decode(key);
  if (cps.empty()) return {Propensity::prob(0), Propensity::prob(0)};
  const bool mono = syllables.size() == 1;
  const bool never = mono && cfg.never_synalephe_monosyllables.count(key) > 0;
  const auto prob_it = mono ? cfg.probabilistic_monosyllables.find(key) : cfg.probabilistic_monosyllables.end();
  const bool probabilistic = prob_it != cfg.probabilistic_monosyllables.end();

  auto vowel_start = [&] {
    if (utf8::is_vowel(cps[0])) return true;
    return cps[0] == U'h' && cps.size() > 1 && utf8::is_vowel(cps[1]);
  };

  Propensity left;
  if (utf8::is_apostrophe(cps.front())) {
    left = Propensity::apostrophe();
  } else if (never) {
    left = Propensity::prob(vowel_start() ? 1.0 : 0.0);
  } else if (probabilistic) {
    left = Propensity::prob(prob_it->second.first);
  } else if (const auto first = utf8::decode(utf8::to_lower(syllables.front()));
             first.size() >= 2 && first[0] == U'i' && utf8::is_vowel(first[1])) {
    left = Propensity::prob(cfg.diphthong_boundary_p);
  } else {
    left = Propensity::prob(vowel_start() ? 1.0 : 0.0);
  }

  Propensity right;
  const char32_t last = cps.back();
  const auto tail = utf8::decode(utf8::to_lower(syllables.back()));
  if (utf8::is_apostrophe(last)) {
    right = Propensity::apostrophe();
  } else if (never) {
    right = Propensity::prob(0.0);
  } else if (probabilistic) {
    right = Propensity::prob(prob_it->second.second);
  } else if (utf8::has_written_accent(last)) {
    right = Propensity::prob(cfg.accented_final_default_p_r);
  } else if (primary_accent == 0 && tail.size() >= 2 && utf8::is_vowel(tail[tail.size() - 1]) &&
             utf8::is_vowel(tail[tail.size() - 2])) {
    right = Propensity::prob(cfg.diphthong_boundary_p);
  } else {
    right = Propensity::prob(utf8::is_vowel(last) ? 1.0 : 0.0);
  }
  return {left, right};
}

std::vector<WordAnalysis> build_analyses(std::string_view form, const RuleConfig& cfg) {
  if (form.empty()) throw ValidationError("cannot analyse an empty form");
  const std::string key = utf8::to_lower(form);

  auto make = [&](std::vector<std::string> syllables, std::vector<int> accents, double weight) {
    WordAnalysis a;
    if (accents.empty()) accents = locate_accent(key, syllables, cfg);
    const auto [pl, pr] = init_propensities(key, syllables, accents.front(), cfg);
    a.tuple = MetricTuple{pl, static_cast<int>(syllables.size()), accents.front(), pr};
    a.syllables = std::move(syllables);
    a.accents = std::move(accents);
    a.weight = weight;
    validate_analysis(a, key);
    return a;
  };

  std::vector<WordAnalysis> out;
  if (const auto it = cfg.variants.find(key); it != cfg.variants.end()) {
    for (const auto& spec : it->second) out.push_back(make(spec.syllables, spec.accents, spec.weight));
  } else {
    out.push_back(make(split_syllables(key, cfg).syllables, {}, 1.0));
  }
  return out;
}

Lexicon build_lexicon(const std::set<std::string, std::less<>>& words, const RuleConfig& cfg,
                      const Lexicon& overrides) {
  Lexicon::Entries entries;
  for (const auto& w : words) {
    const std::string key = utf8::to_lower(w);
    if (key.empty()) continue;
    entries[key] = build_analyses(key, cfg);
  }
  for (const auto& [key, analyses] : overrides.entries()) entries[key] = analyses;
  Lexicon::KeySet ineligible = cfg.stress_ineligible;
  ineligible.insert(overrides.stress_ineligible().begin(), overrides.stress_ineligible().end());
  return Lexicon(std::move(entries), std::move(ineligible));
}

}  // namespace scansion
