#ifndef PERMUTREE_COXETER_HPP
#define PERMUTREE_COXETER_HPP

#include <array>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "permutree/orientation.hpp"
#include "permutree/permutation.hpp"
#include "permutree/word.hpp"

namespace permutree {

/// A word using each of s_1, ..., s_{n-1} exactly once. Kept as a word on
/// purpose: the sorting word depends on the expression, not only on the element.
class CoxeterWord {
public:
  explicit CoxeterWord(Word word);
  static CoxeterWord parse(int n, std::string_view text);

  int degree() const noexcept { return word_.degree(); }
  const Word& word() const noexcept { return word_; }
  /// Position of s_l in the word, 0-based.
  int position(int letter) const { return position_[letter]; }
  std::string to_string() const { return word_.to_string(); }

  friend bool operator==(const CoxeterWord& a, const CoxeterWord& b) { return a.word_ == b.word_; }

private:
  Word word_;
  std::vector<int> position_;
};

/// All (n-1)! Coxeter words, lexicographically.
std::vector<CoxeterWord> all_coxeter_words(int n);

/// U_c holds j with s_j before s_{j-1} in c, D_c the rest of {2, ..., n-1}.
Orientation orientation_of(const CoxeterWord& c);

/// π(c): the greedy reduced expression of π inside c c c ⋯.
Word c_sorting_word(const Permutation& pi, const CoxeterWord& c);

/// The blocks I_1, ..., I_p of letters taken from each copy of c.
std::vector<std::set<int>> c_factorization(const Permutation& pi, const CoxeterWord& c);

/// I_1 ⊇ I_2 ⊇ ⋯ ⊇ I_p.
bool is_c_sortable(const Permutation& pi, const CoxeterWord& c);

/// The five conditions, in order: c-sortable; π(c) accepted by P(U_c, D_c);
/// some reduced expression accepted by P(U_c, D_c); for each j some reduced
/// expression accepted by its own automaton; pattern avoidance.
using CSortingConditions = std::array<bool, 5>;

CSortingConditions csorting_conditions(const Permutation& pi, const CoxeterWord& c);

struct CSortingDisagreement {
  Permutation pi;
  CSortingConditions conditions;
};

struct CSortingReport {
  CoxeterWord c;
  std::size_t checked = 0;
  std::size_t all_true = 0;
  std::vector<CSortingDisagreement> disagreements;

  bool ok() const noexcept { return disagreements.empty(); }
  /// One {"pi": ..., "conditions": [...]} object per disagreement.
  std::vector<std::string> json_lines() const;
};

CSortingReport verify_csorting_equivalences(int n, const CoxeterWord& c);

} // namespace permutree

#endif
