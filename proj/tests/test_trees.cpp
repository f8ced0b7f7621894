#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "dot_parse.hpp"
#include "oracles.hpp"
#include "permutree/automata.hpp"
#include "permutree/trees.hpp"

using namespace permutree;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }
Word W(int n, const char* s) { return Word::parse(n, s); }

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(PERMUTREE_GOLDEN_DIR) + "/" + name);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << name);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// ≺-least accepted reduced word by filtering the full enumeration.
std::optional<Word> lexmin_by_enumeration(const Permutation& pi, const Orientation& o,
                                          const PriorityOrder& order) {
  std::optional<Word> best;
  for (const auto& w : all_reduced_words(pi))
    if (run_product(o, w).accepting() && (!best || order.less(w, *best)))
      best = w;
  return best;
}

} // namespace

TEST_CASE("lex-minimal words") {
  for (int n = 3; n <= 5; ++n)
    for (int j = 2; j <= n - 1; ++j) {
      const Permutation t = evaluate(Word(n, {j - 1, j, j - 1}));
      CHECK(lexmin_word(t, Orientation(n, {j}, {}), PriorityOrder::natural(n)) ==
            Word(n, {j, j - 1, j}));
    }
  CHECK(lexmin_word(identity(4), Orientation(4, {2}, {3}), PriorityOrder::natural(4)) == Word(4));
  const Orientation u2(4, {2}, {});
  const auto w = lexmin_word(P("4321"), u2, PriorityOrder::natural(4));
  REQUIRE(w);
  CHECK(w == lexmin_by_enumeration(P("4321"), u2, PriorityOrder::natural(4)));
  CHECK(*w == W(4, "2,1,3,2,1,3"));
  CHECK_FALSE(lexmin_word(P("4231"), u2, PriorityOrder::natural(4)));
}

TEST_CASE("pruned search matches filtered enumeration for every priority at n = 4") {
  std::vector<int> letters{1, 2, 3};
  do {
    const PriorityOrder order(4, letters);
    for (const auto& o : all_disjoint_orientations(4))
      for (const auto& pi : all_permutations(4))
        REQUIRE(lexmin_word(pi, o, order) == lexmin_by_enumeration(pi, o, order));
  } while (std::next_permutation(letters.begin(), letters.end()));
}

TEST_CASE("pruned search matches filtered enumeration at n = 5") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 3; ++trial) {
    const PriorityOrder order = trial == 0 ? PriorityOrder::natural(5) : PriorityOrder::random(5, rng);
    for (const auto& o : all_disjoint_orientations(5))
      for (const auto& pi : all_permutations(5))
        REQUIRE(lexmin_word(pi, o, order) == lexmin_by_enumeration(pi, o, order));
  }
}

TEST_CASE("tree sizes") {
  const auto natural = PriorityOrder::natural(4);
  CHECK(generating_tree(4, Orientation(4, {2}, {}), natural).size() == 18);
  CHECK(generating_tree(4, Orientation(4, {2, 3}, {}), natural).size() == 14);
  for (int n = 1; n <= 5; ++n)
    CHECK(generating_tree(n, Orientation::empty(n), PriorityOrder::natural(n)).size() ==
          static_cast<std::size_t>(factorial(n)));
  CHECK(count_minimal(4, Orientation(4, {2, 3}, {})) == 14);
  CHECK(count_minimal(4, Orientation::empty(4)) == 24);
  CHECK(count_minimal(4, Orientation(4, {2}, {})) == 18);
  CHECK_THROWS_AS(generating_tree(4, Orientation(4, {2}, {2}), natural), std::invalid_argument);
  CHECK_THROWS_AS(count_minimal(4, Orientation(4, {3}, {3})), std::invalid_argument);
}

TEST_CASE("trees reject word sets that are not prefix closed") {
  CHECK_THROWS_AS(GeneratingTree(Orientation::empty(3), PriorityOrder::natural(3),
                                 {Word(3), W(3, "1,2")}),
                  std::logic_error);
}

TEST_CASE("tree for U={2} at n = 4") {
  const auto tree = generating_tree(4, Orientation(4, {2}, {}), PriorityOrder::natural(4));
  for (const char* s : {"2314", "2341", "2413", "3241", "2431", "4231"})
    CHECK_FALSE(tree.find(P(s)));
  std::set<std::tuple<std::string, std::string, int>> edges;
  for (const auto& node : tree.nodes())
    if (node.parent)
      edges.emplace(tree.nodes()[*node.parent].pi.to_string(), node.pi.to_string(), node.word.back());
  const std::set<std::tuple<std::string, std::string, int>> expected{
      {"1234", "2134", 1}, {"1234", "1324", 2}, {"1234", "1243", 3}, {"2134", "2143", 3},
      {"1324", "3124", 1}, {"1324", "1342", 3}, {"1243", "1423", 2}, {"3124", "3214", 2},
      {"3124", "3142", 3}, {"1342", "1432", 2}, {"1423", "4123", 1}, {"3142", "3412", 2},
      {"4123", "4213", 2}, {"1432", "4132", 1}, {"3412", "4312", 1}, {"3412", "3421", 3},
      {"4312", "4321", 3}};
  CHECK(edges == expected);
}

TEST_CASE("tree invariants") {
  for (int n = 1; n <= 5; ++n) {
    std::mt19937 rng(n);
    const std::vector<PriorityOrder> orders{PriorityOrder::natural(n), PriorityOrder::random(n, rng)};
    for (const auto& o : all_disjoint_orientations(n)) {
      std::set<Permutation> reference;
      for (const auto& pi : all_permutations(n))
        if (oracle::minimal(pi, o))
          reference.insert(pi);
      for (const auto& order : orders) {
        const auto tree = generating_tree(n, o, order);
        REQUIRE(tree.size() == reference.size());
        std::set<Permutation> seen;
        for (const auto& node : tree.nodes()) {
          REQUIRE(evaluate(node.word) == node.pi);
          seen.insert(node.pi);
          if (!node.parent) {
            REQUIRE(node.word.empty());
            continue;
          }
          const auto& parent = tree.nodes()[*node.parent];
          REQUIRE(parent.word == node.word.prefix(node.word.size() - 1));
          REQUIRE(parent.pi.right_multiplied(node.word.back()) == node.pi);
          REQUIRE(node.pi.length() == parent.pi.length() + 1);
        }
        REQUIRE(seen == reference);
      }
    }
  }
}

TEST_CASE("weak order diagram") {
  CHECK(weak_order_hasse(2).elements.size() == 2);
  CHECK(weak_order_hasse(2).covers.size() == 1);
  CHECK(weak_order_hasse(3).covers.size() == 6);
  const auto d = weak_order_hasse(4);
  CHECK(d.elements.size() == 24);
  CHECK(d.covers.size() == 36);
  for (const auto& c : d.covers) {
    CHECK(d.elements[c.upper] == d.elements[c.lower].right_multiplied(c.letter));
    CHECK(d.elements[c.upper].length() == d.elements[c.lower].length() + 1);
  }
  CHECK(weak_order_hasse(5).covers.size() == 4 * 120 / 2);
}

TEST_CASE("tree DOT export") {
  const auto natural = PriorityOrder::natural(4);
  const auto t_u2 = generating_tree(4, Orientation(4, {2}, {}), natural);
  const std::string overlay = export_tree_dot(t_u2, weak_order_hasse(4));
  CHECK(overlay == read_golden("tree_U2_n4.dot"));
  const auto t_u23 = generating_tree(4, Orientation(4, {2, 3}, {}), natural);
  CHECK(export_tree_dot(t_u23, weak_order_hasse(4)) == read_golden("tree_U23_n4.dot"));

  const auto g = dot::parse(overlay);
  CHECK(g.nodes.size() == 24);
  std::size_t tree_edges = 0, gray = 0;
  for (const auto& e : g.edges) {
    if (e.attributes.find("color=gray") != std::string::npos) {
      ++gray;
      continue;
    }
    ++tree_edges;
    const int l = std::stoi(e.attributes.substr(e.attributes.find("label=\"s") + 8));
    CHECK(e.attributes.find("color=" + letter_colour(l)) != std::string::npos);
  }
  CHECK(tree_edges == 17);
  CHECK(gray == 36 - 17);
  CHECK(g.node_attributes.at("4231").find("gray") != std::string::npos);
  CHECK(g.node_attributes.at("4321").find("gray") == std::string::npos);

  const auto tiny = dot::parse(export_tree_dot(generating_tree(2, Orientation::empty(2), PriorityOrder::natural(2))));
  CHECK(tiny.nodes.size() == 2);
  CHECK(tiny.edges.size() == 1);

  CHECK(letter_colour(1) == "blue");
  CHECK(letter_colour(2) == "red");
  CHECK(letter_colour(3) == "green");
  CHECK(letter_colour(9) == "blue");
}

TEST_CASE("tree JSON") {
  const auto tree = generating_tree(3, Orientation(3, {2}, {}), PriorityOrder::natural(3));
  const auto j = tree_to_json(tree);
  CHECK(j["size"] == 5);
  CHECK(j["nodes"]["ε"] == "123");
  CHECK(j["nodes"]["s2·s1"] == "312");
  CHECK(j["U"] == std::vector<int>{2});
}
