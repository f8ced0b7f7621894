#include "permutree/coxeter.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "permutree/automata.hpp"
#include "permutree/patterns.hpp"
#include "permutree/priority.hpp"
#include "permutree/sorting.hpp"

namespace permutree {

CoxeterWord::CoxeterWord(Word word) : word_(std::move(word)), position_(std::max(word_.degree(), 1), -1) {
  const int n = word_.degree();
  if (static_cast<int>(word_.size()) != n - 1)
    throw std::invalid_argument("a Coxeter word of S_" + std::to_string(n) + " has " +
                                std::to_string(n - 1) + " letters");
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (position_[word_[i]] != -1)
      throw std::invalid_argument("s" + std::to_string(word_[i]) + " repeated in Coxeter word");
    position_[word_[i]] = static_cast<int>(i);
  }
}

CoxeterWord CoxeterWord::parse(int n, std::string_view text) { return CoxeterWord(Word::parse(n, text)); }

std::vector<CoxeterWord> all_coxeter_words(int n) {
  std::vector<int> letters(std::max(n - 1, 0));
  std::iota(letters.begin(), letters.end(), 1);
  std::vector<CoxeterWord> out;
  do {
    out.emplace_back(Word(n, letters));
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

Orientation orientation_of(const CoxeterWord& c) {
  std::set<int> up, down;
  for (int j = 2; j <= c.degree() - 1; ++j)
    (c.position(j) < c.position(j - 1) ? up : down).insert(j);
  return Orientation(c.degree(), std::move(up), std::move(down));
}

Word c_sorting_word(const Permutation& pi, const CoxeterWord& c) {
  return greedy_extraction(pi, c.word(), true).word;
}

std::vector<std::set<int>> c_factorization(const Permutation& pi, const CoxeterWord& c) {
  return greedy_extraction(pi, c.word(), true).passes;
}

bool is_c_sortable(const Permutation& pi, const CoxeterWord& c) {
  const auto blocks = c_factorization(pi, c);
  for (std::size_t i = 1; i < blocks.size(); ++i)
    if (!std::includes(blocks[i - 1].begin(), blocks[i - 1].end(), blocks[i].begin(), blocks[i].end()))
      return false;
  return true;
}

CSortingConditions csorting_conditions(const Permutation& pi, const CoxeterWord& c) {
  const int n = pi.degree();
  const Orientation o = orientation_of(c);
  const PriorityOrder natural = PriorityOrder::natural(n);
  CSortingConditions out{};
  out[0] = is_c_sortable(pi, c);
  out[1] = run_product(o, c_sorting_word(pi, c)).accepting();
  out[2] = find_accepted_word(pi, o, natural).has_value();
  out[3] = true;
  for (int j : o.up())
    out[3] = out[3] && find_accepted_word(pi, Orientation(n, {j}, {}), natural).has_value();
  for (int j : o.down())
    out[3] = out[3] && find_accepted_word(pi, Orientation(n, {}, {j}), natural).has_value();
  out[4] = avoids_orientation_patterns(pi, o);
  return out;
}

std::vector<std::string> CSortingReport::json_lines() const {
  std::vector<std::string> lines;
  for (const auto& d : disagreements)
    lines.push_back(nlohmann::json{{"c", c.word().to_list()},
                                   {"pi", d.pi.to_string()},
                                   {"conditions", d.conditions}}
                        .dump());
  return lines;
}

CSortingReport verify_csorting_equivalences(int n, const CoxeterWord& c) {
  if (c.degree() != n)
    throw std::invalid_argument("Coxeter word degree does not match n");
  CSortingReport report{c, 0, 0, {}};
  for (const Permutation& pi : all_permutations(n)) {
    const auto conditions = csorting_conditions(pi, c);
    ++report.checked;
    const auto yes = std::count(conditions.begin(), conditions.end(), true);
    if (yes == 5)
      ++report.all_true;
    else if (yes != 0)
      report.disagreements.push_back({pi, conditions});
  }
  return report;
}

} // namespace permutree
