#include "scansion/lexicon.hpp"

#include <cmath>
#include <numeric>

#include "scansion/errors.hpp"
#include "scansion/utf8.hpp"
#include "text_util.hpp"

namespace scansion {

namespace {

constexpr double kWeightTolerance = 1e-9;
constexpr std::string_view kIneligiblePragma = "#!stress_ineligible";

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

Propensity Propensity::prob(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw ValidationError("propensity out of [0,1]: " + detail::format_double(x));
  Propensity p;
  p.value_ = x;
  return p;
}

std::string to_string(Propensity p) {
  return p.is_apostrophe() ? std::string("A") : detail::format_double(p.value());
}

Propensity parse_propensity(std::string_view text) {
  if (text == "A") return Propensity::apostrophe();
  const auto v = detail::parse_double(text);
  if (!v) throw ValidationError("bad propensity '" + std::string(text) + "'");
  return Propensity::prob(*v);
}

std::string WordAnalysis::syllabification() const { return join(syllables, "|"); }

void validate_analysis(const WordAnalysis& a, std::string_view form) {
  const auto& t = a.tuple;
  const std::string where = " (" + std::string(form) + ")";
  if (t.syllables < 1) throw ValidationError("syllable count must be positive" + where);
  if (static_cast<int>(a.syllables.size()) != t.syllables)
    throw ValidationError("syllable list length differs from tuple count" + where);
  for (const auto& s : a.syllables)
    if (s.empty()) throw ValidationError("empty syllable" + where);
  if (join(a.syllables, "") != form) throw ValidationError("syllables do not spell the word" + where);
  if (a.accents.empty()) throw ValidationError("missing accent" + where);
  if (a.accents.front() != t.accent) throw ValidationError("primary accent differs from tuple" + where);
  for (std::size_t i = 0; i < a.accents.size(); ++i) {
    const int o = a.accents[i];
    if (o > 0 || o < -(t.syllables - 1)) throw ValidationError("accent offset out of range" + where);
    for (std::size_t j = 0; j < i; ++j)
      if (a.accents[j] == o) throw ValidationError("duplicate accent offset" + where);
  }
  if (!(a.weight > 0.0 && a.weight <= 1.0)) throw ValidationError("weight outside (0,1]" + where);
  if (!t.left.is_apostrophe()) Propensity::prob(t.left.value());
  if (!t.right.is_apostrophe()) Propensity::prob(t.right.value());
}

void validate_analyses(std::string_view key, const std::vector<WordAnalysis>& analyses) {
  if (!is_normalized_key(key)) throw ValidationError("key not normalized: '" + std::string(key) + "'");
  if (analyses.empty()) throw ValidationError("no analyses for " + std::string(key));
  double sum = 0.0;
  for (const auto& a : analyses) {
    validate_analysis(a, key);
    sum += a.weight;
  }
  if (std::abs(sum - 1.0) > kWeightTolerance)
    throw ValidationError("weights for " + std::string(key) + " sum to " + detail::format_double(sum));
}

bool is_normalized_key(std::string_view key) {
  if (key.empty()) return false;
  for (char32_t cp : utf8::decode(key)) {
    if (utf8::is_space(cp)) return false;
    if (utf8::to_lower(cp) != cp) return false;
    if (utf8::is_apostrophe(cp) && cp != utf8::kApostrophe) return false;
  }
  return true;
}

Lexicon::Lexicon()
    : entries_(std::make_shared<const Entries>()), ineligible_(std::make_shared<const KeySet>()) {}

Lexicon::Lexicon(Entries entries, KeySet stress_ineligible) {
  for (const auto& [key, analyses] : entries) validate_analyses(key, analyses);
  for (const auto& key : stress_ineligible)
    if (!is_normalized_key(key)) throw ValidationError("stress-ineligible key not normalized: " + key);
  entries_ = std::make_shared<const Entries>(std::move(entries));
  ineligible_ = std::make_shared<const KeySet>(std::move(stress_ineligible));
}

const std::vector<WordAnalysis>* Lexicon::find(std::string_view key) const noexcept {
  const auto it = entries_->find(key);
  return it == entries_->end() ? nullptr : &it->second;
}

const std::vector<WordAnalysis>& Lexicon::lookup(std::string_view key) const {
  if (const auto* found = find(key)) return *found;
  throw UnknownWord(std::string(key));
}

bool Lexicon::stress_eligible(std::string_view key) const noexcept {
  return ineligible_->find(key) == ineligible_->end();
}

Lexicon Lexicon::with_override(std::string key, std::vector<WordAnalysis> analyses) const {
  validate_analyses(key, analyses);
  auto copy = std::make_shared<Entries>(*entries_);
  (*copy)[std::move(key)] = std::move(analyses);
  Lexicon out = *this;
  out.entries_ = std::move(copy);
  return out;
}

Lexicon Lexicon::with_stress_ineligible(KeySet keys) const {
  for (const auto& key : keys)
    if (!is_normalized_key(key)) throw ValidationError("stress-ineligible key not normalized: " + key);
  Lexicon out = *this;
  out.ineligible_ = std::make_shared<const KeySet>(std::move(keys));
  return out;
}

Lexicon parse_lexicon(std::string_view text) {
  Lexicon::Entries entries;
  Lexicon::KeySet ineligible;
  // Keys whose weight column was left blank, with the line they came from.
  std::map<std::string, std::size_t, std::less<>> defaulted;

  const auto all = detail::lines(text);
  for (std::size_t i = 0; i < all.size(); ++i) {
    const std::size_t line_no = i + 1;
    const std::string_view line = all[i];
    if (detail::trim(line).empty()) continue;
    if (line.substr(0, kIneligiblePragma.size()) == kIneligiblePragma) {
      auto fields = detail::split(line, '\t');
      for (std::size_t f = 1; f < fields.size(); ++f)
        if (!fields[f].empty()) ineligible.emplace(fields[f]);
      continue;
    }
    if (line.front() == '#') continue;

    const auto fields = detail::split(line, '\t');
    if (fields.size() != 6)
      throw ParseError("expected 6 tab-separated fields, found " + std::to_string(fields.size()), line_no);

    try {
      const std::string key(fields[0]);
      WordAnalysis a;
      if (fields[1].empty() || fields[1] == "-") {
        defaulted.emplace(key, line_no);
        a.weight = 1.0;
      } else {
        const auto w = detail::parse_double(fields[1]);
        if (!w) throw ParseError("bad weight '" + std::string(fields[1]) + "'", line_no);
        a.weight = *w;
      }
      a.tuple.left = parse_propensity(fields[2]);
      a.tuple.right = parse_propensity(fields[3]);
      for (auto s : detail::split(fields[4], '|')) a.syllables.emplace_back(s);
      for (auto s : detail::split(fields[5], ',')) {
        const auto v = detail::parse_long(detail::trim(s));
        if (!v) throw ParseError("bad accent list '" + std::string(fields[5]) + "'", line_no);
        a.accents.push_back(static_cast<int>(*v));
      }
      a.tuple.syllables = static_cast<int>(a.syllables.size());
      a.tuple.accent = a.accents.front();
      validate_analysis(a, key);
      entries[key].push_back(std::move(a));
    } catch (const ValidationError& e) {
      throw ValidationError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }

  for (const auto& [key, line_no] : defaulted)
    if (entries.at(key).size() > 1)
      throw ValidationError("line " + std::to_string(line_no) + ": " + key +
                            " has several analyses and needs explicit weights");

  return Lexicon(std::move(entries), std::move(ineligible));
}

std::string serialize_lexicon(const Lexicon& lex) {
  std::string out = "# scansion lexicon v1\n# key\tweight\tp_l\tp_r\tsyllabification\taccents\n";
  if (!lex.stress_ineligible().empty()) {
    out += kIneligiblePragma;
    for (const auto& k : lex.stress_ineligible()) out += "\t" + k;
    out += "\n";
  }
  for (const auto& [key, analyses] : lex.entries()) {
    for (const auto& a : analyses) {
      out += key;
      out += '\t' + detail::format_double(a.weight);
      out += '\t' + to_string(a.tuple.left);
      out += '\t' + to_string(a.tuple.right);
      out += '\t' + a.syllabification();
      out += '\t';
      for (std::size_t i = 0; i < a.accents.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(a.accents[i]);
      }
      out += '\n';
    }
  }
  return out;
}

Lexicon load_lexicon_file(const std::string& path) { return parse_lexicon(detail::read_file(path)); }

}  // namespace scansion
