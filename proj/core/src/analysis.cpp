#include "scansion/analysis.hpp"

#include <algorithm>

#include "scansion/errors.hpp"
#include "scansion/utf8.hpp"

namespace scansion {

namespace {

bool vowel_end(std::string_view key) {
  const auto cps = utf8::decode(key);
  return !cps.empty() && (utf8::is_vowel(cps.back()) || utf8::is_apostrophe(cps.back()));
}

bool vowel_start(std::string_view key) {
  const auto cps = utf8::decode(key);
  if (cps.empty()) return false;
  if (utf8::is_vowel(cps[0]) || utf8::is_apostrophe(cps[0])) return true;
  return cps[0] == U'h' && cps.size() > 1 && utf8::is_vowel(cps[1]);
}

}  // namespace

const char* to_string(Side s) { return s == Side::Left ? "left" : "right"; }
const char* to_string(Outcome o) { return o == Outcome::Synalephe ? "synalephe" : "dialephe"; }

std::vector<Occurrence> classify_word(std::string_view key, const ScanReport& report) {
  std::vector<Occurrence> out;
  for (const auto& r : report.verses) {
    if (!r.scansion.chosen) continue;
    const auto steps = r.scansion.chosen->steps();
    for (std::size_t i = 0; i < steps.size(); ++i) {
      if (steps[i]->word->key != key) continue;
      if (i > 0 && vowel_end(steps[i - 1]->word->key) && vowel_start(key)) {
        out.push_back({r.location, std::string(key), Side::Left,
                       steps[i]->melded ? Outcome::Synalephe : Outcome::Dialephe, steps[i - 1]->word->key});
      }
      if (i + 1 < steps.size() && vowel_end(key) && vowel_start(steps[i + 1]->word->key)) {
        out.push_back({r.location, std::string(key), Side::Right,
                       steps[i + 1]->melded ? Outcome::Synalephe : Outcome::Dialephe, steps[i + 1]->word->key});
      }
    }
  }
  return out;
}

AccentPattern make_pattern(std::vector<bool> positions) {
  AccentPattern p;
  p.positions = std::move(positions);
  for (bool b : p.positions) p.rendered += b ? '+' : '-';
  return p;
}

AccentPattern parse_pattern(std::string_view rendered) {
  std::vector<bool> pos;
  for (char c : rendered) {
    if (c != '+' && c != '-') throw ValidationError("accent pattern may only contain '+' and '-'");
    pos.push_back(c == '+');
  }
  return make_pattern(std::move(pos));
}

AccentPattern accent_pattern(const VerseScansion& scansion, const Lexicon& lex, bool include_secondary) {
  if (!scansion.chosen) throw ScansionError("no chosen scansion");
  const auto& state = *scansion.chosen;
  std::vector<bool> pos(static_cast<std::size_t>(std::max(state.count, 0)), false);
  for (const WordStep* step : state.steps()) {
    if (!lex.stress_eligible(step->word->key)) continue;
    const auto& accents = step->word->analyses[step->analysis_index].accents;
    const std::size_t n = include_secondary ? accents.size() : 1;
    for (std::size_t k = 0; k < n; ++k) {
      const int p = step->end_count + accents[k];
      if (p >= 1 && p <= state.count) pos[static_cast<std::size_t>(p - 1)] = true;
    }
  }
  return make_pattern(std::move(pos));
}

std::string metric_units(const AccentPattern& pattern) {
  std::vector<std::size_t> stresses;
  for (std::size_t i = 0; i < pattern.positions.size(); ++i)
    if (pattern.positions[i]) stresses.push_back(i);
  if (stresses.empty()) throw ValidationError("accent pattern without stresses");
  std::string out;
  if (stresses.front() > 0) out += std::to_string(stresses.front()) + "/";
  for (std::size_t k = 0; k < stresses.size(); ++k) {
    const std::size_t end = k + 1 < stresses.size() ? stresses[k + 1] : pattern.positions.size();
    out += std::to_string(end - stresses[k]) + "/";
  }
  return out;
}

std::map<std::string, int> pattern_histogram(const ScanReport& report, const Lexicon& lex) {
  std::map<std::string, int> h;
  for (const auto& r : report.verses)
    if (r.scansion.status == ScanStatus::Ok) ++h[accent_pattern(r.scansion, lex).rendered];
  return h;
}

std::vector<std::pair<std::string, int>> sorted_histogram(const std::map<std::string, int>& histogram) {
  std::vector<std::pair<std::string, int>> v(histogram.begin(), histogram.end());
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  return v;
}

std::string histogram_tsv(const std::map<std::string, int>& histogram) {
  std::string out = "pattern\tunits\tcount\n";
  for (const auto& [pattern, count] : sorted_histogram(histogram)) {
    const auto p = parse_pattern(pattern);
    const bool stressed = std::find(p.positions.begin(), p.positions.end(), true) != p.positions.end();
    out += pattern + '\t' + (stressed ? metric_units(p) : std::string("-")) + '\t' + std::to_string(count) + '\n';
  }
  return out;
}

std::string occurrences_tsv(const std::vector<Occurrence>& occurrences) {
  std::string out = "cantica\tcanto\tline\tword\tside\toutcome\tneighbor\n";
  for (const auto& o : occurrences) {
    out += o.location.cantica + '\t' + to_roman(o.location.canto) + '\t' + std::to_string(o.location.line) + '\t' +
           o.key + '\t' + to_string(o.side) + '\t' + to_string(o.outcome) + '\t' + o.neighbor + '\n';
  }
  return out;
}

}  // namespace scansion
