#ifndef PERMUTREE_PATTERNS_HPP
#define PERMUTREE_PATTERNS_HPP

#include <array>
#include <optional>
#include <string>

#include "permutree/orientation.hpp"
#include "permutree/permutation.hpp"

namespace permutree {

/// UP refers to the subword jki and the automaton U(j); DOWN to kij and D(j).
enum class Kind { Up, Down };

std::string to_string(Kind kind);

/// Positions p < q < r of an occurrence of jki (UP) or kij (DOWN).
using PatternWitness = std::array<int, 3>;

/// Finds an occurrence around the fixed middle value j, 2 <= j <= n-1, in O(n).
std::optional<PatternWitness> find_pattern(const Permutation& pi, int j, Kind kind);

bool contains_pattern(const Permutation& pi, int j, Kind kind);

/// No jki for j ∈ U and no kij for j ∈ D.
bool avoids_orientation_patterns(const Permutation& pi, const Orientation& o);

/// The inversion set condition: (k,i) ∈ inv(π) forces (k,j) when j ∈ U and
/// (j,i) when j ∈ D, for all i < j < k.
bool is_aligned(const Permutation& pi, const Orientation& o);

} // namespace permutree

#endif
