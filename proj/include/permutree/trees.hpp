#ifndef PERMUTREE_TREES_HPP
#define PERMUTREE_TREES_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "permutree/orientation.hpp"
#include "permutree/permutation.hpp"
#include "permutree/priority.hpp"
#include "permutree/word.hpp"

namespace permutree {

/// π(U, D, ≺): the ≺-least reduced expression of π accepted by P(U, D).
std::optional<Word> lexmin_word(const Permutation& pi, const Orientation& o,
                                const PriorityOrder& order);

struct TreeNode {
  Word word;
  Permutation pi;
  std::optional<std::size_t> parent; ///< index of the node for word minus its last letter
};

/// The lex-minimal accepted words of all minimal permutations, linked by
/// deleting the last letter.
class GeneratingTree {
public:
  /// Throws std::logic_error if the word set is not closed by prefix.
  GeneratingTree(Orientation o, PriorityOrder order, std::vector<Word> words);

  int degree() const noexcept { return orientation_.degree(); }
  const Orientation& orientation() const noexcept { return orientation_; }
  const PriorityOrder& order() const noexcept { return order_; }
  /// Sorted by length, then ≺-lexicographically; the root ε comes first.
  const std::vector<TreeNode>& nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  std::optional<std::size_t> find(const Word& w) const;
  std::optional<std::size_t> find(const Permutation& pi) const;

private:
  Orientation orientation_;
  PriorityOrder order_;
  std::vector<TreeNode> nodes_;
  std::map<Word, std::size_t> by_word_;
  std::map<Permutation, std::size_t> by_pi_;
};

/// Requires U ∩ D = ∅. Enumerates S_n.
GeneratingTree generating_tree(int n, const Orientation& o, const PriorityOrder& order);

struct WeakOrderCover {
  std::size_t lower;
  std::size_t upper;
  int letter; ///< upper = lower · s_letter
};

/// The Hasse diagram of the right weak order on S_n.
struct WeakOrderDiagram {
  int n;
  std::vector<Permutation> elements; ///< by length, then lexicographically
  std::vector<WeakOrderCover> covers;
};

WeakOrderDiagram weak_order_hasse(int n);

/// Number of π ∈ S_n avoiding the orientation's patterns. Requires U ∩ D = ∅.
std::size_t count_minimal(int n, const Orientation& o);

/// Tree edges coloured by their last letter: s1 blue, s2 red, s3 green, then
/// orange, purple, brown, cyan, magenta, cycling. With an overlay, the rest of
/// the weak order is drawn in gray.
std::string export_tree_dot(const GeneratingTree& tree,
                            const std::optional<WeakOrderDiagram>& overlay = std::nullopt);

/// The colour used for letter l.
std::string letter_colour(int letter);

nlohmann::json tree_to_json(const GeneratingTree& tree);

} // namespace permutree

#endif
