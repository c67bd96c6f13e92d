#include "oracle.hpp"

#include <algorithm>

namespace scansion::testing {

namespace {

double junction(const Propensity& right, const Propensity& left) {
  if (right.is_apostrophe() || left.is_apostrophe()) return 1.0;
  return right.value() * left.value();
}

}  // namespace

std::vector<OracleState> enumerate_all(const std::vector<OracleWord>& words) {
  std::vector<OracleState> out;
  const std::size_t n = words.size();
  std::vector<std::size_t> pick(n, 0);

  // Odometer over analysis choices.
  for (;;) {
    // Meld probabilities for this choice; the first word has no junction.
    std::vector<double> m(n, 0.0);
    for (std::size_t i = 1; i < n; ++i)
      m[i] = junction(words[i - 1].analyses[pick[i - 1]].tuple.right, words[i].analyses[pick[i]].tuple.left);

    std::vector<std::size_t> open;
    for (std::size_t i = 1; i < n; ++i)
      if (m[i] > 0.0 && m[i] < 1.0) open.push_back(i);

    for (unsigned long mask = 0; mask < (1ul << open.size()); ++mask) {
      std::vector<bool> melded(n, false);
      for (std::size_t i = 1; i < n; ++i) melded[i] = m[i] >= 1.0;
      for (std::size_t k = 0; k < open.size(); ++k) melded[open[k]] = (mask >> k) & 1;

      OracleState s;
      s.likelihood = 1.0;
      for (std::size_t i = 0; i < n; ++i) {
        const auto& a = words[i].analyses[pick[i]];
        s.likelihood *= a.weight;
        if (i > 0) s.likelihood *= melded[i] ? m[i] : 1.0 - m[i];
        s.count += a.tuple.syllables - (melded[i] ? 1 : 0);
        for (std::size_t k = 0; k < a.syllables.size(); ++k) {
          if (k == 0 && melded[i]) {
            s.text += " ";
          } else {
            if (!s.text.empty()) s.text += k == 0 ? " |" : "|";
            else s.text += "|";
          }
          s.text += a.syllables[k];
        }
        if (!words[i].stress_eligible) continue;
        for (std::size_t k = 0; k < a.accents.size(); ++k) {
          const int pos = s.count + a.accents[k];
          s.a4 = s.a4 || pos == 4;
          s.a6 = s.a6 || pos == 6;
          if (k == 0) s.a10 = s.a10 || pos == 10;
        }
      }
      out.push_back(std::move(s));
    }

    std::size_t i = 0;
    while (i < n && ++pick[i] == words[i].analyses.size()) pick[i++] = 0;
    if (i == n) break;
  }
  std::sort(out.begin(), out.end(), [](const OracleState& a, const OracleState& b) {
    return a.text != b.text ? a.text < b.text : a.likelihood < b.likelihood;
  });
  return out;
}

}  // namespace scansion::testing
