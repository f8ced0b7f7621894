#ifndef PERMUTREE_SORTING_HPP
#define PERMUTREE_SORTING_HPP

#include <optional>
#include <set>
#include <vector>

#include "permutree/automata.hpp"
#include "permutree/orientation.hpp"
#include "permutree/patterns.hpp"
#include "permutree/permutation.hpp"
#include "permutree/priority.hpp"
#include "permutree/word.hpp"

namespace permutree {

/// (U \ {l}) ∪ {l+1} when l ∈ U, otherwise U.
std::set<int> move_u(std::set<int> up, int letter);
/// (D \ {l+1}) ∪ {l} when l+1 ∈ D, otherwise D.
std::set<int> move_d(std::set<int> down, int letter);

enum class Algorithm { Single, Permutree };

/// Which branch produced a step.
enum class Phase {
  Healthy,   ///< a letter that keeps every automaton healthy
  Ill,       ///< single sort: the one step into the ill row
  BlockSort, ///< single sort: sorting within [j] and [n] \ [j]
  Setwise,   ///< permutree sort: setwise-fixing checks passed
  Stuck,     ///< a descent whose setwise checks failed; nothing applied
  Done,      ///< terminal row
};

/// One π([k]) = [k] test of the permutree sort.
struct SetwiseCheck {
  int k;
  bool holds;

  friend bool operator==(const SetwiseCheck&, const SetwiseCheck&) = default;
};

/// One trace row: the state before `letter` is applied.
struct SortStep {
  Permutation before;
  Word word_before;
  int token = 0;         ///< single sort: the moving j
  std::set<int> up;      ///< permutree sort: the moved U
  std::set<int> down;    ///< permutree sort: the moved D
  std::optional<int> letter;
  Phase phase = Phase::Done;
  std::vector<SetwiseCheck> checks;
};

struct SortTrace {
  Algorithm algorithm;
  Kind kind = Kind::Up; ///< single sort only
  Permutation input;
  std::vector<SortStep> steps; ///< the last entry is the terminal row
  Word word;
  Permutation final;
  bool success;
};

/// Greedy sort along U(j), or its mirror for D(j). Always returns a word accepted
/// by the automaton; succeeds exactly when π avoids jki (resp. kij).
SortTrace sort_single(const Permutation& pi, int j, Kind kind, const PriorityOrder& order);

/// (U,D)-permutree sorting. Requires U ∩ D = ∅. Succeeds exactly
/// when π is (U,D)-permutree minimal.
SortTrace permutree_sort(const Permutation& pi, const Orientation& o, const PriorityOrder& order);

/// π avoids jki for j ∈ U and kij for j ∈ D.
bool is_minimal(const Permutation& pi, const Orientation& o);

struct Extraction {
  Word word;
  Permutation residual;
  /// Letters taken in each pass over the template (only passes that took
  /// something are kept at the end).
  std::vector<std::set<int>> passes;
};

/// Scans `tmpl` left to right, taking l whenever it is a left inversion of the
/// residual. With `repeat`, cycles through the template until the residual is
/// the identity; the template must then contain every generator.
Extraction greedy_extraction(const Permutation& pi, const Word& tmpl, bool repeat);

/// The extracted word when it is a reduced expression of π.
std::optional<Word> greedy_subword(const Permutation& pi, const Word& tmpl, bool repeat);

enum class NetworkReading { Cyclic, SinglePass };

/// π refutes `tmpl` as a (U,D) sorting network: "the extraction is a reduced
/// expression of π accepted by P(U,D)" disagrees with is_minimal(π, o).
bool refutes_network(const Permutation& pi, const Word& tmpl, const Orientation& o,
                     NetworkReading reading = NetworkReading::Cyclic);

/// First counterexample of S_n in lexicographic order, or nullopt when `tmpl`
/// is a valid network.
std::optional<Permutation> check_sorting_network(const Word& tmpl, const Orientation& o,
                                                 NetworkReading reading = NetworkReading::Cyclic);

/// Experimental candidate for a single automaton (|U| + |D| = 1): walks the
/// healthy row, emitting (looping letters)^k followed by the forward letter at
/// each healthy state, then appends any missing generators in descending order.
Word healthy_chain_network(const Orientation& o);

} // namespace permutree

#endif
