#include "fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace scansion::testing {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open fixture " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto tab = line.find('\t', start);
    out.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return out;
}

}  // namespace

std::string data_path(const std::string& relative) { return std::string(SCANSION_DATA_DIR) + "/" + relative; }

std::string test_data_path(const std::string& relative) {
  return std::string(SCANSION_TEST_DATA_DIR) + "/" + relative;
}

const Lexicon& seed_lexicon() {
  static const Lexicon lex = load_lexicon_file(data_path("lexicon/seed.lex"));
  return lex;
}

const CorpusDocument& canto_one() {
  static const CorpusDocument doc = load_corpus_file(data_path("corpus/inferno-01.txt"));
  return doc;
}

const std::vector<std::string>& canto_one_golden() {
  static const std::vector<std::string> lines = split_lines(slurp(test_data_path("inferno-01.golden.txt")));
  return lines;
}

const std::vector<QuotedVerse>& quoted_verses() {
  static const std::vector<QuotedVerse> verses = [] {
    std::vector<QuotedVerse> out;
    const auto lines = split_lines(slurp(test_data_path("paper_verses.tsv")));
    for (std::size_t i = 1; i < lines.size(); ++i) {
      if (lines[i].empty()) continue;
      const auto f = split_tabs(lines[i]);
      if (f.size() != 4) throw std::runtime_error("bad quoted verse row: " + lines[i]);
      out.push_back({Location{f[0], parse_roman(f[1]), std::stoi(f[2])}, f[3]});
    }
    return out;
  }();
  return verses;
}

const QuotedVerse& quoted(const std::string& cantica, int canto, int line) {
  for (const auto& v : quoted_verses())
    if (v.location == Location{cantica, canto, line}) return v;
  throw std::runtime_error("no quoted verse at " + to_string(Location{cantica, canto, line}));
}

std::vector<std::string> fixture_texts() {
  std::vector<std::string> out;
  for (const auto& v : canto_one().cantiche.front().canti.front().verses) out.push_back(v.text);
  for (const auto& v : quoted_verses()) out.push_back(v.text);
  return out;
}

CorpusDocument quoted_document() {
  CorpusDocument doc;
  for (const auto& q : quoted_verses()) {
    if (doc.cantiche.empty() || doc.cantiche.back().name != q.location.cantica)
      doc.cantiche.push_back(Cantica{q.location.cantica, {}});
    auto& canti = doc.cantiche.back().canti;
    if (canti.empty() || canti.back().number != q.location.canto) canti.push_back(Canto{q.location.canto, {}});
    canti.back().verses.push_back(Verse{q.location.line, q.text, false});
  }
  return doc;
}

std::vector<int> golden_waivers() {
  std::vector<int> out;
  for (const auto& line : split_lines(slurp(test_data_path("inferno-01.waivers.txt")))) {
    if (line.empty() || line.front() == '#') continue;
    out.push_back(std::stoi(line));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace scansion::testing
