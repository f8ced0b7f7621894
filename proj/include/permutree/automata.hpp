#ifndef PERMUTREE_AUTOMATA_HPP
#define PERMUTREE_AUTOMATA_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "permutree/orientation.hpp"
#include "permutree/patterns.hpp"
#include "permutree/permutation.hpp"
#include "permutree/priority.hpp"
#include "permutree/word.hpp"

namespace permutree {

/// Top, middle and bottom rows of U(j) / D(j). Only dead is rejecting.
enum class Status { Healthy, Ill, Dead };

std::string to_string(Status status);

/// A state of U(origin) or D(origin) acting on words of S_degree.
///
/// `param` is the index m of the sub-automaton U(m) (resp. D(m)) the run is
/// currently in, so j <= m <= n for UP and 1 <= m <= j for DOWN. The
/// boundary automata U(n) and D(1) have no forward or death transitions.
struct AutomatonState {
  Kind kind;
  int origin;
  int degree;
  int param;
  Status status;

  bool accepting() const noexcept { return status != Status::Dead; }
  /// 1-based column in the drawing of the complete automaton.
  int column() const noexcept { return kind == Kind::Up ? param - origin + 1 : origin - param + 1; }

  /// "healthy@4"
  std::string to_string() const;

  friend auto operator<=>(const AutomatonState&, const AutomatonState&) = default;
};

AutomatonState initial_state(Kind kind, int j, int n);
AutomatonState step(const AutomatonState& state, int letter);
AutomatonState run(Kind kind, int j, int n, const Word& w);
bool accepts(Kind kind, int j, int n, const Word& w);

/// Every state of U(j) / D(j), column by column, healthy before ill before dead.
std::vector<AutomatonState> all_states(Kind kind, int j, int n);

/// A state of the intersection P(U, D): one UP component per j ∈ U (ascending)
/// followed by one DOWN component per j ∈ D (ascending).
class ProductState {
public:
  explicit ProductState(std::vector<AutomatonState> components)
      : components_(std::move(components)) {}

  const std::vector<AutomatonState>& components() const noexcept { return components_; }
  Status classify() const noexcept;
  bool accepting() const noexcept { return classify() != Status::Dead; }

  ProductState stepped(int letter) const;

  friend auto operator<=>(const ProductState&, const ProductState&) = default;

private:
  std::vector<AutomatonState> components_;
};

Status classify(const ProductState& p);
ProductState initial_product(const Orientation& o);
ProductState step(const ProductState& p, int letter);
/// Defined for any family, disjoint or not.
ProductState run_product(const Orientation& o, const Word& w);

/// Exhaustive oracle: some reduced expression of π is accepted by P(U, D).
bool exists_accepted_exhaustive(const Permutation& pi, const Orientation& o);

/// Fast path: for disjoint orientations this is the pattern predicate;
/// otherwise a pruned search over reduced expressions.
bool exists_accepted(const Permutation& pi, const Orientation& o);

/// The ≺-lexicographically least reduced expression of π accepted by P(U, D),
/// found by a ≺-ordered depth-first search that cuts at dead states.
std::optional<Word> find_accepted_word(const Permutation& pi, const Orientation& o,
                                       const PriorityOrder& order);

/// The common final state of all reduced expressions of π accepted by U(j)
/// (resp. D(j)); nullopt when none is accepted.
std::optional<AutomatonState> accepted_final_state(const Permutation& pi, Kind kind, int j);

/// Number of reduced expressions of π ending at each state of U(j) / D(j).
std::map<AutomatonState, std::size_t> final_state_histogram(const Permutation& pi, Kind kind,
                                                            int j);

/// DOT rendering of U(j) / D(j) for degree n.
std::string export_dot(Kind kind, int j, int n);

/// DOT rendering of P(U, D): the full tuple grid, or the tuples reachable from
/// the initial state.
std::string export_dot_product(const Orientation& o, bool reachable_only);

} // namespace permutree

#endif
