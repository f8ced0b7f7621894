#include "permutree/trees.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>
#include <stdexcept>

#include "permutree/automata.hpp"
#include "permutree/patterns.hpp"

namespace permutree {

std::optional<Word> lexmin_word(const Permutation& pi, const Orientation& o,
                                const PriorityOrder& order) {
  return find_accepted_word(pi, o, order);
}

GeneratingTree::GeneratingTree(Orientation o, PriorityOrder order, std::vector<Word> words)
    : orientation_(std::move(o)), order_(std::move(order)) {
  std::sort(words.begin(), words.end(), [&](const Word& a, const Word& b) {
    if (a.size() != b.size())
      return a.size() < b.size();
    return order_.less(a, b);
  });
  for (Word& w : words) {
    std::optional<std::size_t> parent;
    if (!w.empty()) {
      auto it = by_word_.find(w.prefix(w.size() - 1));
      if (it == by_word_.end())
        throw std::logic_error("word set is not closed by prefix at " + w.to_string());
      parent = it->second;
    }
    Permutation pi = evaluate(w);
    const std::size_t index = nodes_.size();
    if (!by_word_.emplace(w, index).second || !by_pi_.emplace(pi, index).second)
      throw std::logic_error("duplicate node " + w.to_string());
    nodes_.push_back(TreeNode{std::move(w), std::move(pi), parent});
  }
}

std::optional<std::size_t> GeneratingTree::find(const Word& w) const {
  auto it = by_word_.find(w);
  if (it == by_word_.end())
    return std::nullopt;
  return it->second;
}

std::optional<std::size_t> GeneratingTree::find(const Permutation& pi) const {
  auto it = by_pi_.find(pi);
  if (it == by_pi_.end())
    return std::nullopt;
  return it->second;
}

GeneratingTree generating_tree(int n, const Orientation& o, const PriorityOrder& order) {
  if (o.degree() != n || order.degree() != n)
    throw std::invalid_argument("degree mismatch");
  if (!o.is_disjoint())
    throw std::invalid_argument("generating trees need U and D to be disjoint");
  std::vector<Word> words;
  for (const Permutation& pi : all_permutations(n)) {
    if (!avoids_orientation_patterns(pi, o))
      continue;
    auto w = lexmin_word(pi, o, order);
    if (!w)
      throw std::logic_error("minimal permutation " + pi.to_string() + " has no accepted word");
    words.push_back(std::move(*w));
  }
  return GeneratingTree(o, order, std::move(words));
}

WeakOrderDiagram weak_order_hasse(int n) {
  WeakOrderDiagram d{n, all_permutations(n), {}};
  std::stable_sort(d.elements.begin(), d.elements.end(),
                   [](const Permutation& a, const Permutation& b) { return a.length() < b.length(); });
  std::map<Permutation, std::size_t> index;
  for (std::size_t i = 0; i < d.elements.size(); ++i)
    index.emplace(d.elements[i], i);
  for (std::size_t i = 0; i < d.elements.size(); ++i) {
    const Permutation& pi = d.elements[i];
    for (int l = 1; l <= n - 1; ++l)
      if (pi.at(l) < pi.at(l + 1))
        d.covers.push_back({i, index.at(pi.right_multiplied(l)), l});
  }
  return d;
}

std::size_t count_minimal(int n, const Orientation& o) {
  if (o.degree() != n)
    throw std::invalid_argument("degree mismatch");
  if (!o.is_disjoint())
    throw std::invalid_argument("counting needs U and D to be disjoint");
  std::size_t count = 0;
  for (const Permutation& pi : all_permutations(n))
    if (avoids_orientation_patterns(pi, o))
      ++count;
  return count;
}

std::string letter_colour(int letter) {
  static const std::array<const char*, 8> palette{"blue",   "red",   "green", "orange",
                                                  "purple", "brown", "cyan",  "magenta"};
  return palette[(letter - 1) % palette.size()];
}

namespace {

std::string quoted(const Permutation& pi) { return "\"" + pi.to_string() + "\""; }

} // namespace

std::string export_tree_dot(const GeneratingTree& tree, const std::optional<WeakOrderDiagram>& overlay) {
  std::ostringstream out;
  out << "digraph \"tree n=" << tree.degree() << " " << tree.orientation().to_string() << "\" {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=plaintext];\n";

  std::set<std::pair<Permutation, Permutation>> tree_edges;
  for (const auto& node : tree.nodes())
    if (node.parent)
      tree_edges.emplace(tree.nodes()[*node.parent].pi, node.pi);

  if (overlay) {
    for (const auto& pi : overlay->elements) {
      out << "  " << quoted(pi);
      if (!tree.find(pi))
        out << " [fontcolor=gray]";
      out << ";\n";
    }
  } else {
    for (const auto& node : tree.nodes())
      out << "  " << quoted(node.pi) << ";\n";
  }

  for (const auto& node : tree.nodes()) {
    if (!node.parent)
      continue;
    const int l = node.word.back();
    out << "  " << quoted(tree.nodes()[*node.parent].pi) << " -> " << quoted(node.pi)
        << " [label=\"s" << l << "\", color=" << letter_colour(l) << ", penwidth=2];\n";
  }
  if (overlay) {
    for (const auto& c : overlay->covers) {
      const auto& lo = overlay->elements[c.lower];
      const auto& hi = overlay->elements[c.upper];
      if (tree_edges.count({lo, hi}))
        continue;
      out << "  " << quoted(lo) << " -> " << quoted(hi) << " [color=gray, arrowhead=none];\n";
    }
  }
  out << "}\n";
  return out.str();
}

nlohmann::json tree_to_json(const GeneratingTree& tree) {
  nlohmann::json nodes = nlohmann::json::object();
  for (const auto& node : tree.nodes())
    nodes[node.word.to_string()] = node.pi.to_string();
  const auto& o = tree.orientation();
  return nlohmann::json{{"n", tree.degree()},
                        {"U", std::vector<int>(o.up().begin(), o.up().end())},
                        {"D", std::vector<int>(o.down().begin(), o.down().end())},
                        {"priority", tree.order().order()},
                        {"size", tree.size()},
                        {"nodes", std::move(nodes)}};
}

} // namespace permutree
