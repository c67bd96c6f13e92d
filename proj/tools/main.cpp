#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "scansion/analysis.hpp"
#include "scansion/corpus.hpp"
#include "scansion/errors.hpp"
#include "scansion/lexicon.hpp"
#include "scansion/scander.hpp"
#include "scansion/tokenizer.hpp"
#include "scansion/wordrules.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerseFailures = 1;
constexpr int kExitFatal = 2;

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw scansion::ScansionError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string resolve_lexicon(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("SCANSION_LEXICON"); env && *env) return env;
  throw scansion::ScansionError("no lexicon given (use --lexicon or set SCANSION_LEXICON)");
}

std::string full_precision(double v) {
  std::ostringstream ss;
  ss << std::setprecision(17) << v;
  return ss.str();
}

std::string three_decimals(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

scansion::ScanReport scan_file(const std::string& in, const std::string& amendments, const scansion::Lexicon& lex,
                               unsigned jobs) {
  auto doc = scansion::load_corpus_file(in);
  if (!amendments.empty()) doc = scansion::apply_amendments(doc, scansion::load_amendments_file(amendments));
  return scansion::scan_document(doc, lex, scansion::ScanConfig(), jobs);
}

int run_scan(const std::string& lexicon, bool verbose, const std::string& verse) {
  const auto lex = scansion::load_lexicon_file(resolve_lexicon(lexicon));
  const auto tokens = scansion::tokenize(scansion::normalize_line(verse));
  const auto result = scansion::scan_verse(tokens, lex);

  if (result.status == scansion::ScanStatus::FailUnknownWord) {
    for (const auto& k : result.unknown_words) std::cerr << "unknown word: " << k << "\n";
    return kExitVerseFailures;
  }
  if (verbose) {
    for (const auto& s : result.candidates) {
      std::cout << "(" << s.text() << ", " << full_precision(s.likelihood) << ", " << s.count << ", "
                << scansion::to_string(s.pending_p_r) << ")\n";
    }
    std::cout << "admissible: " << result.admissible.size() << "\n";
  }
  if (!result.chosen) {
    std::cout << scansion::render_scansion(result, tokens) << "\n";
    std::cout << "status=" << scansion::to_string(result.status) << "\n";
    std::cerr << "no admissible scansion\n";
    return kExitVerseFailures;
  }
  const auto& c = *result.chosen;
  std::cout << scansion::render_scansion(result, tokens) << "\n";
  std::cout << "likelihood=" << (verbose ? full_precision(c.likelihood) : three_decimals(c.likelihood))
            << " syllables=" << c.count << " a4=" << c.a4 << " a6=" << c.a6 << " a10=" << c.a10
            << " status=" << scansion::to_string(result.status) << "\n";
  return kExitOk;
}

int run_corpus(const std::string& lexicon, const std::string& amendments, const std::string& in,
               const std::string& out, const std::string& name, unsigned jobs) {
  const auto lex = scansion::load_lexicon_file(resolve_lexicon(lexicon));
  auto doc = scansion::load_corpus_file(in);
  if (!amendments.empty()) {
    std::vector<scansion::Amendment> skipped;
    doc = scansion::apply_amendments(doc, scansion::load_amendments_file(amendments), &skipped);
    for (const auto& a : skipped)
      std::cerr << "amendment for " << scansion::to_string(a.location) << " not applicable: canto absent\n";
  }
  const auto report = scansion::scan_document(doc, lex, scansion::ScanConfig(), jobs);
  const auto summary = scansion::write_outputs(report, out, name);
  for (const auto& f : summary.files) std::cout << f << "\n";
  std::cerr << summary.verses << " verses, " << report.ok.size() << " ok, " << summary.anomalies
            << " anomalies, " << summary.failures << " failures\n";
  for (const auto& [key, n] : report.unknown_words) std::cerr << "unknown word: " << key << " (" << n << ")\n";
  return summary.failures ? kExitVerseFailures : kExitOk;
}

int run_lex_build(const std::string& rules, const std::vector<std::string>& words, const std::string& overrides,
                  const std::string& out) {
  const auto cfg = scansion::load_rule_config(rules);
  std::set<std::string, std::less<>> keys;
  for (const auto& path : words) {
    std::istringstream text(read_text(path));
    for (std::string line; std::getline(text, line);) {
      if (!line.empty() && line.front() == '#') continue;
      for (const auto& t : scansion::tokenize(scansion::normalize_line(line)))
        if (t.kind == scansion::TokenKind::Word) keys.insert(t.key);
    }
  }
  const auto over = overrides.empty() ? scansion::Lexicon() : scansion::load_lexicon_file(overrides);
  const auto lex = scansion::build_lexicon(keys, cfg, over);
  const auto text = scansion::serialize_lexicon(lex);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out, std::ios::binary);
    f << text;
    if (!f) throw scansion::ScansionError("cannot write " + out);
  }
  std::cerr << lex.size() << " keys\n";
  return kExitOk;
}

int run_lex_check(const std::string& lexicon) {
  const auto lex = scansion::load_lexicon_file(resolve_lexicon(lexicon));
  std::size_t analyses = 0;
  for (const auto& [key, list] : lex.entries()) analyses += list.size();
  std::cout << lex.size() << " keys, " << analyses << " analyses, " << lex.stress_ineligible().size()
            << " stress-ineligible\n";
  return kExitOk;
}

int run_query(const std::string& lexicon, const std::string& in, const std::string& amendments,
              const std::string& word) {
  const auto lex = scansion::load_lexicon_file(resolve_lexicon(lexicon));
  const auto report = scan_file(in, amendments, lex, 1);
  std::cout << scansion::occurrences_tsv(scansion::classify_word(scansion::lex_key(word), report));
  return kExitOk;
}

int run_stats(const std::string& lexicon, const std::string& in, const std::string& amendments) {
  const auto lex = scansion::load_lexicon_file(resolve_lexicon(lexicon));
  const auto report = scan_file(in, amendments, lex, 1);
  std::cout << scansion::histogram_tsv(scansion::pattern_histogram(report, lex));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Syllabification and metric analysis of hendecasyllabic verse"};
  app.require_subcommand(1);

  std::string lexicon, amendments, in, out, name = "corpus", rules, overrides, word, verse, lex_out;
  std::vector<std::string> words;
  bool verbose = false;
  unsigned jobs = 1;

  auto* scan = app.add_subcommand("scan", "Scan one verse");
  scan->add_option("--lexicon", lexicon, "Lexicon file (default: $SCANSION_LEXICON)");
  scan->add_flag("--verbose,-v", verbose, "Print every final state");
  scan->add_option("verse", verse, "Verse text")->required();

  auto* corpus = app.add_subcommand("corpus", "Scan a corpus file and write reports");
  corpus->add_option("--lexicon", lexicon, "Lexicon file (default: $SCANSION_LEXICON)");
  corpus->add_option("--amendments", amendments, "Amendment TSV")->check(CLI::ExistingFile);
  corpus->add_option("--in", in, "Corpus text")->required()->check(CLI::ExistingFile);
  corpus->add_option("--out", out, "Output directory")->required();
  corpus->add_option("--name", name, "Output file stem");
  corpus->add_option("--jobs,-j", jobs, "Worker threads (0 = all cores)");

  auto* lex = app.add_subcommand("lex", "Lexicon tools");
  lex->require_subcommand(1);
  auto* build = lex->add_subcommand("build", "Build a lexicon from rules and a word source");
  build->add_option("--rules", rules, "Rule config")->required()->check(CLI::ExistingFile);
  build->add_option("--words", words, "Text files to take words from")->required()->check(CLI::ExistingFile);
  build->add_option("--overrides", overrides, "Lexicon entries that replace rule output")->check(CLI::ExistingFile);
  build->add_option("--out,-o", lex_out, "Output file (default: stdout)");
  auto* check = lex->add_subcommand("check", "Validate a lexicon file");
  check->add_option("--lexicon", lexicon, "Lexicon file (default: $SCANSION_LEXICON)");

  auto* query = app.add_subcommand("query", "Synalephe/dialephe occurrences of a word");
  query->add_option("--lexicon", lexicon, "Lexicon file (default: $SCANSION_LEXICON)");
  query->add_option("--in", in, "Corpus text")->required()->check(CLI::ExistingFile);
  query->add_option("--amendments", amendments, "Amendment TSV")->check(CLI::ExistingFile);
  query->add_option("--word", word, "Word to look for")->required();

  auto* stats = app.add_subcommand("stats", "Accent-pattern histogram");
  stats->add_option("--lexicon", lexicon, "Lexicon file (default: $SCANSION_LEXICON)");
  stats->add_option("--in", in, "Corpus text")->required()->check(CLI::ExistingFile);
  stats->add_option("--amendments", amendments, "Amendment TSV")->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitFatal;
  }

  try {
    if (*scan) return run_scan(lexicon, verbose, verse);
    if (*corpus) return run_corpus(lexicon, amendments, in, out, name, jobs);
    if (*build) return run_lex_build(rules, words, overrides, lex_out);
    if (*check) return run_lex_check(lexicon);
    if (*query) return run_query(lexicon, in, amendments, word);
    if (*stats) return run_stats(lexicon, in, amendments);
  } catch (const scansion::UnknownWord& e) {
    std::cerr << e.what() << "\n";
    return kExitVerseFailures;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFatal;
  }
  return kExitFatal;
}
