#include "scansion/scander.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "scansion/errors.hpp"
#include "scansion/utf8.hpp"

namespace scansion {

namespace {

// Re-spells lexicon syllables (lower case) with the token's own characters.
std::vector<std::string> surface_split(const std::string& surface, const std::vector<std::string>& syllables) {
  const std::u32string cps = utf8::decode(surface);
  std::size_t total = 0;
  for (const auto& s : syllables) total += utf8::length(s);
  if (total != cps.size()) return syllables;
  std::vector<std::string> out;
  std::size_t pos = 0;
  for (const auto& s : syllables) {
    const std::size_t len = utf8::length(s);
    out.push_back(utf8::encode(std::u32string_view(cps).substr(pos, len)));
    pos += len;
  }
  return out;
}

const std::vector<std::string>& step_syllables(const WordStep& step) {
  return step.word->surface_syllables[step.analysis_index];
}

void append_word(std::string& text, const WordStep& step) {
  const auto& syl = step_syllables(step);
  for (std::size_t k = 0; k < syl.size(); ++k) {
    if (k == 0 && step.melded) {
      text += ' ';
    } else {
      if (k == 0 && !text.empty()) text += ' ';
      text += '|';
    }
    text += syl[k];
  }
}

}  // namespace

double meld_probability(Propensity p_r, Propensity p_l) {
  if (p_r.is_apostrophe() || p_l.is_apostrophe()) return 1.0;
  return p_r.value() * p_l.value();
}

const char* to_string(ScanStatus s) {
  switch (s) {
    case ScanStatus::Ok: return "Ok";
    case ScanStatus::WarnNoCaesura: return "WarnNoCaesura";
    case ScanStatus::FailNoAccent10: return "FailNoAccent10";
    case ScanStatus::FailUnknownWord: return "FailUnknownWord";
  }
  return "?";
}

void ScanConfig::validate() const {
  if (max_total_syllables < 1) throw ValidationError("max_total_syllables must be at least 1");
  if (!(likelihood_floor > 0)) throw ValidationError("likelihood_floor must be positive");
  if (!(tie_epsilon > 0)) throw ValidationError("tie_epsilon must be positive");
}

std::vector<const WordStep*> ScanState::steps() const {
  std::vector<const WordStep*> out;
  for (const WordStep* s = trail.get(); s; s = s->prev.get()) out.push_back(s);
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<std::string> ScanState::syllables() const {
  std::vector<std::string> out;
  for (const WordStep* step : steps()) {
    const auto& syl = step_syllables(*step);
    for (std::size_t k = 0; k < syl.size(); ++k) {
      if (k == 0 && step->melded && !out.empty())
        out.back() += " " + syl[k];
      else
        out.push_back(syl[k]);
    }
  }
  return out;
}

std::string ScanState::text() const {
  std::string text;
  for (const WordStep* step : steps()) append_word(text, *step);
  return text;
}

ScanState initial_state() { return ScanState{}; }

ScanWord prepare_word(const Token& token, std::size_t token_index, const Lexicon& lex) {
  ScanWord w;
  w.token_index = token_index;
  w.key = token.key.empty() ? lex_key(token) : token.key;
  w.analyses = lex.lookup(w.key);
  w.stress_eligible = lex.stress_eligible(w.key);
  for (const auto& a : w.analyses) w.surface_syllables.push_back(surface_split(token.surface, a.syllables));
  return w;
}

std::vector<ScanState> advance(const std::vector<ScanState>& states, const std::shared_ptr<const ScanWord>& word,
                               const ScanConfig& cfg) {
  std::vector<ScanState> out;
  out.reserve(states.size() * word->analyses.size() * 2);
  for (const auto& state : states) {
    for (std::size_t ai = 0; ai < word->analyses.size(); ++ai) {
      const WordAnalysis& a = word->analyses[ai];
      // Nothing to meld with before the first word.
      const double m = state.trail ? meld_probability(state.pending_p_r, a.tuple.left) : 0.0;

      for (const bool melded : {true, false}) {
        const double branch = melded ? m : 1.0 - m;
        if (branch <= 0.0) continue;

        ScanState next = state;
        next.likelihood = state.likelihood * a.weight * branch;
        next.count = state.count + a.tuple.syllables - (melded ? 1 : 0);
        next.pending_p_r = a.tuple.right;
        if (state.a10) ++next.words_after_accent10;

        for (std::size_t k = 0; k < a.accents.size(); ++k) {
          if (!word->stress_eligible) break;
          const int pos = next.count + a.accents[k];
          if (pos == 4) next.a4 = true;
          if (pos == 6) next.a6 = true;
          if (pos == 10 && k == 0 && !next.a10) {
            next.a10 = true;
            next.accent10_word_index = word->token_index;
            next.words_after_accent10 = 0;
          }
        }

        if (cfg.pruning) {
          if (next.likelihood < cfg.likelihood_floor) continue;
          if (next.a10 && next.accent10_word_index != word->token_index && next.count > cfg.max_total_syllables)
            continue;
        }

        auto step = std::make_shared<WordStep>();
        step->prev = state.trail;
        step->word = word;
        step->analysis_index = ai;
        step->melded = melded;
        step->end_count = next.count;
        next.trail = std::move(step);
        out.push_back(std::move(next));
      }
    }
  }
  return out;
}

std::vector<ScanState> advance(const std::vector<ScanState>& states, const std::vector<WordAnalysis>& analyses,
                               std::size_t token_index, bool stress_eligible, const ScanConfig& cfg) {
  auto w = std::make_shared<ScanWord>();
  w->token_index = token_index;
  w->analyses = analyses;
  w->stress_eligible = stress_eligible;
  for (const auto& a : analyses) w->surface_syllables.push_back(a.syllables);
  return advance(states, std::shared_ptr<const ScanWord>(std::move(w)), cfg);
}

VerseScansion finalize(std::vector<ScanState> states, const ScanConfig& cfg) {
  VerseScansion out;
  out.candidates = std::move(states);

  std::vector<ScanState> admissible;
  for (const auto& s : out.candidates) {
    if (cfg.require_a10 && !s.a10) continue;
    const bool final_word_accented = s.a10 && s.words_after_accent10 == 0;
    if (!final_word_accented && s.count > cfg.max_total_syllables) continue;
    admissible.push_back(s);
  }

  auto by_likelihood = [](const ScanState& a, const ScanState& b) { return a.likelihood > b.likelihood; };

  if (admissible.empty()) {
    out.status = ScanStatus::FailNoAccent10;
    if (!out.candidates.empty())
      out.diagnostic = *std::min_element(out.candidates.begin(), out.candidates.end(), by_likelihood);
    return out;
  }

  out.status = ScanStatus::Ok;
  if (cfg.prefer_a4_or_a6) {
    std::vector<ScanState> caesura;
    for (const auto& s : admissible)
      if (s.a4 || s.a6) caesura.push_back(s);
    if (caesura.empty())
      out.status = ScanStatus::WarnNoCaesura;
    else
      admissible = std::move(caesura);
  }

  std::stable_sort(admissible.begin(), admissible.end(), by_likelihood);
  std::size_t best = 0;
  for (std::size_t k = 1; k < admissible.size(); ++k) {
    const double diff = admissible[k].likelihood - admissible[best].likelihood;
    if (diff > cfg.tie_epsilon ||
        (std::abs(diff) <= cfg.tie_epsilon && admissible[k].count < admissible[best].count))
      best = k;
  }
  std::rotate(admissible.begin(), admissible.begin() + static_cast<std::ptrdiff_t>(best),
              admissible.begin() + static_cast<std::ptrdiff_t>(best) + 1);
  out.chosen = admissible.front();
  out.admissible = std::move(admissible);
  return out;
}

VerseScansion scan_verse(const std::vector<Token>& tokens, const Lexicon& lex, const ScanConfig& cfg) {
  std::vector<std::shared_ptr<const ScanWord>> words;
  std::vector<std::string> unknown;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].kind != TokenKind::Word) continue;
    try {
      words.push_back(std::make_shared<const ScanWord>(prepare_word(tokens[i], i, lex)));
    } catch (const UnknownWord& e) {
      unknown.push_back(e.key());
    }
  }
  if (!unknown.empty()) {
    VerseScansion out;
    out.status = ScanStatus::FailUnknownWord;
    out.unknown_words = std::move(unknown);
    return out;
  }

  std::vector<ScanState> states{initial_state()};
  for (const auto& w : words) states = advance(states, w, cfg);
  return finalize(std::move(states), cfg);
}

VerseScansion scan_text(std::string_view line, const Lexicon& lex, const ScanConfig& cfg) {
  return scan_verse(tokenize(normalize_line(line)), lex, cfg);
}

std::string render_state(const ScanState& state, const std::vector<Token>& tokens) {
  std::map<std::size_t, const WordStep*> by_token;
  for (const WordStep* step : state.steps()) by_token[step->word->token_index] = step;

  std::string text;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].kind == TokenKind::Punct) {
      text += tokens[i].surface;
      continue;
    }
    const auto it = by_token.find(i);
    if (it == by_token.end()) {
      if (!text.empty()) text += ' ';
      text += tokens[i].surface;
      continue;
    }
    append_word(text, *it->second);
  }
  return text;
}

}  // namespace scansion
