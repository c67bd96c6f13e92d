#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "scansion/lexicon.hpp"
#include "scansion/scander.hpp"
#include "scansion/tokenizer.hpp"

namespace scansion {

struct Verse {
  int line = 0;
  std::string text;
  // A blank line preceded this verse in the source (tercet boundary).
  bool stanza_break_before = false;

  friend bool operator==(const Verse&, const Verse&) = default;
};

struct Canto {
  int number = 0;
  std::vector<Verse> verses;

  friend bool operator==(const Canto&, const Canto&) = default;
};

struct Cantica {
  std::string name;
  std::vector<Canto> canti;

  friend bool operator==(const Cantica&, const Cantica&) = default;
};

struct CorpusDocument {
  std::vector<Cantica> cantiche;

  std::size_t verse_count() const;
  Verse* find(std::string_view cantica, int canto, int line);
  const Verse* find(std::string_view cantica, int canto, int line) const;

  friend bool operator==(const CorpusDocument&, const CorpusDocument&) = default;
};

struct Location {
  std::string cantica;
  int canto = 0;
  int line = 0;

  friend bool operator==(const Location&, const Location&) = default;
  friend auto operator<=>(const Location&, const Location&) = default;
};

// "Inferno XX, 81"
std::string to_string(const Location& loc);

int parse_roman(std::string_view roman);  // throws ParseError on bad numerals
std::string to_roman(int n);

// ECMAScript pattern with two groups: cantica name and roman canto number.
inline constexpr const char* kDefaultHeaderPattern =
    R"(^\s*(Inferno|Purgatorio|Paradiso)\s*[:.\-]?\s*Canto\s+([IVXLCDM]+)\s*$)";

// Lines before the first header are ignored; blank lines separate tercets.
// Throws ParseError when no header is found.
CorpusDocument parse_corpus(std::string_view text, const std::string& header_pattern = kDefaultHeaderPattern);
CorpusDocument load_corpus_file(const std::string& path,
                                const std::string& header_pattern = kDefaultHeaderPattern);

struct Amendment {
  Location location;
  std::string original;
  std::string replacement;
  std::string note;

  friend bool operator==(const Amendment&, const Amendment&) = default;
};

// TAB-separated: cantica, canto (roman or arabic), line, original,
// replacement, note. '#' comments.
std::vector<Amendment> parse_amendments(std::string_view text);
std::vector<Amendment> load_amendments_file(const std::string& path);

// Each amendment's original must occur exactly once in its verse, otherwise
// AmendmentMismatch. Amendments pointing at a canto absent from the document
// are not applied and are appended to `skipped` when given.
CorpusDocument apply_amendments(const CorpusDocument& doc, const std::vector<Amendment>& amendments,
                                std::vector<Amendment>* skipped = nullptr);

struct VerseResult {
  Location location;
  std::string text;  // normalized
  bool stanza_break_before = false;
  bool canto_start = false;
  std::vector<Token> tokens;
  VerseScansion scansion;
};

struct ScanReport {
  std::vector<VerseResult> verses;
  std::vector<Location> ok;
  std::vector<Location> anomalies;
  std::vector<Location> failures;
  // key -> number of occurrences
  std::map<std::string, int> unknown_words;
};

// Verses are scanned on `jobs` threads (0 = hardware concurrency); the
// report keeps document order.
ScanReport scan_document(const CorpusDocument& doc, const Lexicon& lex, const ScanConfig& cfg = ScanConfig(),
                         unsigned jobs = 1);

inline constexpr std::string_view kFailureMarker = "!! ";

// Chosen state with punctuation restored; the original text behind the
// failure marker when nothing was chosen.
std::string render_scansion(const VerseScansion& scansion, const std::vector<Token>& tokens);

std::string format_syllabified(const ScanReport& report);
std::string format_report_tsv(const ScanReport& report);
std::string format_anomalies(const ScanReport& report);

struct OutputSummary {
  std::vector<std::string> files;
  std::size_t verses = 0;
  std::size_t anomalies = 0;
  std::size_t failures = 0;
};

// Writes <name>.syl.txt, <name>.report.tsv and <name>.anomalies.txt into
// `dir` (created if missing). Throws ScansionError on I/O failure.
OutputSummary write_outputs(const ScanReport& report, const std::string& dir, const std::string& name = "corpus");

}  // namespace scansion
