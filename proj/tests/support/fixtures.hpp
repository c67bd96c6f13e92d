#pragma once

#include <string>
#include <vector>

#include "scansion/corpus.hpp"
#include "scansion/lexicon.hpp"

namespace scansion::testing {

std::string data_path(const std::string& relative);       // under data/
std::string test_data_path(const std::string& relative);  // under tests/data/

// Loaded once and cached.
const Lexicon& seed_lexicon();
const CorpusDocument& canto_one();
const std::vector<std::string>& canto_one_golden();

struct QuotedVerse {
  Location location;
  std::string text;
};

// Verses from outside Inferno I with their locations.
const std::vector<QuotedVerse>& quoted_verses();
const QuotedVerse& quoted(const std::string& cantica, int canto, int line);

// Every fixture verse text: Inferno I followed by the quoted verses.
std::vector<std::string> fixture_texts();

// The quoted verses as a document, one canto per location group.
CorpusDocument quoted_document();

// Golden-file exemptions: line numbers whose rendering may differ.
std::vector<int> golden_waivers();

}  // namespace scansion::testing
