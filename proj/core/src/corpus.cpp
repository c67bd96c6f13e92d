#include "scansion/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <regex>
#include <thread>

#include "scansion/errors.hpp"
#include "text_util.hpp"

namespace scansion {

namespace {

int roman_value(char c) {
  switch (c) {
    case 'I': return 1;
    case 'V': return 5;
    case 'X': return 10;
    case 'L': return 50;
    case 'C': return 100;
    case 'D': return 500;
    case 'M': return 1000;
    default: return 0;
  }
}

int parse_canto_number(std::string_view s, std::size_t line_no) {
  if (const auto v = detail::parse_long(s)) return static_cast<int>(*v);
  try {
    return parse_roman(s);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line_no);
  }
}

const char* flag(bool b) { return b ? "1" : "0"; }

}  // namespace

std::size_t CorpusDocument::verse_count() const {
  std::size_t n = 0;
  for (const auto& c : cantiche)
    for (const auto& k : c.canti) n += k.verses.size();
  return n;
}

const Verse* CorpusDocument::find(std::string_view cantica, int canto, int line) const {
  for (const auto& c : cantiche) {
    if (c.name != cantica) continue;
    for (const auto& k : c.canti) {
      if (k.number != canto) continue;
      for (const auto& v : k.verses)
        if (v.line == line) return &v;
    }
  }
  return nullptr;
}

Verse* CorpusDocument::find(std::string_view cantica, int canto, int line) {
  return const_cast<Verse*>(std::as_const(*this).find(cantica, canto, line));
}

std::string to_string(const Location& loc) {
  return loc.cantica + " " + to_roman(loc.canto) + ", " + std::to_string(loc.line);
}

int parse_roman(std::string_view roman) {
  if (roman.empty()) throw ParseError("empty roman numeral", 0);
  int total = 0;
  for (std::size_t i = 0; i < roman.size(); ++i) {
    const int v = roman_value(roman[i]);
    if (!v) throw ParseError("bad roman numeral '" + std::string(roman) + "'", 0);
    const int next = i + 1 < roman.size() ? roman_value(roman[i + 1]) : 0;
    total += v < next ? -v : v;
  }
  if (to_roman(total) != roman) throw ParseError("non-canonical roman numeral '" + std::string(roman) + "'", 0);
  return total;
}

std::string to_roman(int n) {
  static const std::pair<int, const char*> table[] = {{1000, "M"}, {900, "CM"}, {500, "D"}, {400, "CD"},
                                                      {100, "C"},  {90, "XC"},  {50, "L"},  {40, "XL"},
                                                      {10, "X"},   {9, "IX"},   {5, "V"},   {4, "IV"},
                                                      {1, "I"}};
  std::string out;
  for (const auto& [v, s] : table) {
    while (n >= v) {
      out += s;
      n -= v;
    }
  }
  return out;
}

CorpusDocument parse_corpus(std::string_view text, const std::string& header_pattern) {
  const std::regex header(header_pattern);
  CorpusDocument doc;
  Canto* canto = nullptr;
  bool blank_seen = false;

  const auto all = detail::lines(text);
  for (std::size_t i = 0; i < all.size(); ++i) {
    const std::string line(all[i]);
    std::smatch m;
    if (std::regex_match(line, m, header)) {
      const std::string name = m[1].str();
      const int number = parse_canto_number(m[2].str(), i + 1);
      if (doc.cantiche.empty() || doc.cantiche.back().name != name) doc.cantiche.push_back(Cantica{name, {}});
      doc.cantiche.back().canti.push_back(Canto{number, {}});
      canto = &doc.cantiche.back().canti.back();
      blank_seen = false;
      continue;
    }
    if (!canto) continue;
    const auto trimmed = detail::trim(line);
    if (trimmed.empty()) {
      blank_seen = true;
      continue;
    }
    Verse v;
    v.line = static_cast<int>(canto->verses.size()) + 1;
    v.text = std::string(trimmed);
    v.stanza_break_before = blank_seen && !canto->verses.empty();
    blank_seen = false;
    canto->verses.push_back(std::move(v));
  }
  if (doc.cantiche.empty()) throw ParseError("no canto header found", 0);
  return doc;
}

CorpusDocument load_corpus_file(const std::string& path, const std::string& header_pattern) {
  return parse_corpus(detail::read_file(path), header_pattern);
}

std::vector<Amendment> parse_amendments(std::string_view text) {
  std::vector<Amendment> out;
  const auto all = detail::lines(text);
  for (std::size_t i = 0; i < all.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto line = all[i];
    if (detail::trim(line).empty() || line.front() == '#') continue;
    const auto f = detail::split(line, '\t');
    if (f.size() != 5 && f.size() != 6)
      throw ParseError("expected 5 or 6 tab-separated fields, found " + std::to_string(f.size()), line_no);
    Amendment a;
    a.location.cantica = std::string(f[0]);
    a.location.canto = parse_canto_number(f[1], line_no);
    const auto verse = detail::parse_long(f[2]);
    if (!verse) throw ParseError("bad line number '" + std::string(f[2]) + "'", line_no);
    a.location.line = static_cast<int>(*verse);
    a.original = std::string(f[3]);
    a.replacement = std::string(f[4]);
    if (f.size() == 6) a.note = std::string(f[5]);
    if (a.original.empty()) throw ParseError("empty original text", line_no);
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<Amendment> load_amendments_file(const std::string& path) {
  return parse_amendments(detail::read_file(path));
}

CorpusDocument apply_amendments(const CorpusDocument& doc, const std::vector<Amendment>& amendments,
                                std::vector<Amendment>* skipped) {
  CorpusDocument out = doc;
  for (const auto& a : amendments) {
    const auto& loc = a.location;
    bool canto_present = false;
    for (const auto& c : out.cantiche)
      if (c.name == loc.cantica)
        for (const auto& k : c.canti) canto_present = canto_present || k.number == loc.canto;
    if (!canto_present) {
      if (skipped) skipped->push_back(a);
      continue;
    }
    Verse* v = out.find(loc.cantica, loc.canto, loc.line);
    if (!v) throw AmendmentMismatch("no verse at " + to_string(loc));
    const auto pos = v->text.find(a.original);
    if (pos == std::string::npos || v->text.find(a.original, pos + 1) != std::string::npos)
      throw AmendmentMismatch("'" + a.original + "' does not occur exactly once at " + to_string(loc) + ": " +
                              v->text);
    v->text.replace(pos, a.original.size(), a.replacement);
  }
  return out;
}

ScanReport scan_document(const CorpusDocument& doc, const Lexicon& lex, const ScanConfig& cfg, unsigned jobs) {
  cfg.validate();
  ScanReport report;
  for (const auto& c : doc.cantiche) {
    for (const auto& k : c.canti) {
      for (std::size_t i = 0; i < k.verses.size(); ++i) {
        VerseResult r;
        r.location = Location{c.name, k.number, k.verses[i].line};
        r.text = normalize_line(k.verses[i].text);
        r.stanza_break_before = k.verses[i].stanza_break_before;
        r.canto_start = i == 0;
        report.verses.push_back(std::move(r));
      }
    }
  }

  auto work = [&](std::size_t i) {
    auto& r = report.verses[i];
    r.tokens = tokenize(r.text);
    r.scansion = scan_verse(r.tokens, lex, cfg);
  };
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  if (jobs == 1 || report.verses.size() < 2) {
    for (std::size_t i = 0; i < report.verses.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < report.verses.size(); i = next++) work(i);
      });
    for (auto& th : pool) th.join();
  }

  for (const auto& r : report.verses) {
    switch (r.scansion.status) {
      case ScanStatus::Ok: report.ok.push_back(r.location); break;
      case ScanStatus::WarnNoCaesura: report.anomalies.push_back(r.location); break;
      default: report.failures.push_back(r.location); break;
    }
    for (const auto& key : r.scansion.unknown_words) ++report.unknown_words[key];
  }
  return report;
}

std::string render_scansion(const VerseScansion& scansion, const std::vector<Token>& tokens) {
  if (!scansion.chosen) return std::string(kFailureMarker) + reconstruct(tokens);
  return render_state(*scansion.chosen, tokens);
}

std::string format_syllabified(const ScanReport& report) {
  std::string out;
  for (const auto& r : report.verses) {
    if (r.canto_start) {
      if (!out.empty()) out += '\n';
      out += r.location.cantica + ": Canto " + to_roman(r.location.canto) + "\n\n";
    } else if (r.stanza_break_before) {
      out += '\n';
    }
    out += render_scansion(r.scansion, r.tokens) + '\n';
  }
  return out;
}

std::string format_report_tsv(const ScanReport& report) {
  std::string out = "cantica\tcanto\tline\tcount\tlikelihood\ta4\ta6\ta10\tstatus\tadmissible\n";
  for (const auto& r : report.verses) {
    const auto& s = r.scansion;
    out += r.location.cantica + '\t' + to_roman(r.location.canto) + '\t' + std::to_string(r.location.line) + '\t';
    if (s.chosen) {
      const auto& c = *s.chosen;
      out += std::to_string(c.count) + '\t' + detail::format_double(c.likelihood) + '\t' + flag(c.a4) + '\t' +
             flag(c.a6) + '\t' + flag(c.a10);
    } else {
      out += "-\t-\t-\t-\t-";
    }
    out += '\t';
    out += to_string(s.status);
    out += '\t' + std::to_string(s.admissible.size()) + '\n';
  }
  return out;
}

std::string format_anomalies(const ScanReport& report) {
  std::string out;
  for (const auto& r : report.verses) {
    if (r.scansion.status != ScanStatus::WarnNoCaesura) continue;
    out += to_string(r.location) + '\t' + render_scansion(r.scansion, r.tokens) + '\n';
  }
  return out;
}

OutputSummary write_outputs(const ScanReport& report, const std::string& dir, const std::string& name) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ScansionError("cannot create " + dir + ": " + ec.message());

  OutputSummary summary;
  auto emit = [&](const std::string& suffix, const std::string& content) {
    const auto path = (fs::path(dir) / (name + suffix)).string();
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) throw ScansionError("cannot write " + path);
    summary.files.push_back(path);
  };
  emit(".syl.txt", format_syllabified(report));
  emit(".report.tsv", format_report_tsv(report));
  emit(".anomalies.txt", format_anomalies(report));
  summary.verses = report.verses.size();
  summary.anomalies = report.anomalies.size();
  summary.failures = report.failures.size();
  return summary;
}

}  // namespace scansion
