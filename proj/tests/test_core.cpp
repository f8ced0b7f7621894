#include <doctest.h>

#include <numeric>
#include <set>

#include "oracles.hpp"
#include "permutree/orientation.hpp"
#include "permutree/patterns.hpp"
#include "permutree/permutation.hpp"
#include "permutree/word.hpp"

using namespace permutree;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }
Word W(int n, const char* s) { return Word::parse(n, s); }
} // namespace

TEST_CASE("identity") {
  CHECK(identity(1).to_string() == "1");
  CHECK(identity(4).to_string() == "1234");
  CHECK(identity(5).to_string() == "12345");
  CHECK(identity(5).length() == 0);
  CHECK_THROWS_AS(identity(0), std::invalid_argument);
}

TEST_CASE("construction rejects non-bijections") {
  CHECK_THROWS_AS(P("12344"), std::invalid_argument);
  CHECK_THROWS_AS(P("1245"), std::invalid_argument);
  CHECK_THROWS_AS(P(""), std::invalid_argument);
  CHECK(P("3 4 2 1") == P("3421"));
  CHECK(P("1,2,3") == identity(3));
  const Permutation big = Permutation::parse("10 9 8 7 6 5 4 3 2 1");
  CHECK(big.degree() == 10);
  CHECK(big.to_string() == "10 9 8 7 6 5 4 3 2 1");
}

TEST_CASE("left multiplication exchanges values") {
  CHECK(left_multiply(4, P("142536")) == P("152436"));
  CHECK(left_multiply(4, P("142563")) == P("152463"));
  CHECK(left_multiply(1, identity(3)) == P("213"));
  CHECK_THROWS_AS(left_multiply(0, identity(3)), std::invalid_argument);
  CHECK_THROWS_AS(left_multiply(3, identity(3)), std::invalid_argument);
}

TEST_CASE("right multiplication exchanges positions") {
  CHECK(right_multiply(P("1234"), 2) == P("1324"));
  CHECK(right_multiply(P("1324"), 1) == P("3124"));
  CHECK(right_multiply(P("4321"), 3) == P("4312"));
  CHECK_THROWS_AS(right_multiply(P("4321"), 4), std::invalid_argument);
}

TEST_CASE("inversion sets") {
  CHECK(inversion_set(P("1234")).empty());
  const auto all = inversion_set(P("4321"));
  CHECK(all.size() == 6);
  const std::vector<InversionPair> expected{{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 2}, {4, 3}};
  CHECK(all == expected);
  const std::vector<InversionPair> small{{2, 1}, {3, 1}, {3, 2}};
  CHECK(inversion_set(P("32145")) == small);
}

TEST_CASE("left inversions") {
  CHECK_FALSE(is_left_inversion(P("413265"), 4));
  CHECK(is_left_inversion(P("3421"), 2));
  CHECK_FALSE(is_left_inversion(identity(5), 3));
  CHECK_THROWS_AS(is_left_inversion(identity(5), 5), std::invalid_argument);
}

TEST_CASE("pattern detection on 42135") {
  const Permutation pi = P("42135");
  for (int j : {2, 3, 4})
    CHECK_FALSE(contains_pattern(pi, j, Kind::Up));
  CHECK(contains_pattern(pi, 3, Kind::Down));
  const auto w = find_pattern(pi, 3, Kind::Down);
  REQUIRE(w);
  CHECK(pi.at((*w)[0]) == 4);
  CHECK(pi.at((*w)[1]) == 2);
  CHECK(pi.at((*w)[2]) == 3);
  for (int j = 2; j <= 4; ++j) {
    CHECK_FALSE(contains_pattern(identity(5), j, Kind::Up));
    CHECK_FALSE(contains_pattern(identity(5), j, Kind::Down));
  }
  CHECK_THROWS_AS(contains_pattern(pi, 1, Kind::Up), std::invalid_argument);
  CHECK_THROWS_AS(contains_pattern(pi, 5, Kind::Down), std::invalid_argument);
}

TEST_CASE("linear pattern scan agrees with the triple loop and returns a real occurrence") {
  for (int n = 3; n <= 7; ++n)
    for (const auto& pi : all_permutations(n))
      for (int j = 2; j <= n - 1; ++j)
        for (Kind kind : {Kind::Up, Kind::Down}) {
          const auto w = find_pattern(pi, j, kind);
          REQUIRE(w.has_value() == oracle::contains(pi, j, kind));
          if (!w)
            continue;
          const auto [p, q, r] = *w;
          REQUIRE(p < q);
          REQUIRE(q < r);
          if (kind == Kind::Up) {
            CHECK((pi.at(p) == j && pi.at(q) > j && pi.at(r) < j));
          } else {
            CHECK((pi.at(p) > j && pi.at(q) < j && pi.at(r) == j));
          }
        }
}

TEST_CASE("alignment") {
  for (const auto& o : all_disjoint_orientations(4))
    CHECK(is_aligned(identity(4), o));
  CHECK_FALSE(is_aligned(P("4231"), Orientation(4, {2}, {})));
  CHECK(is_aligned(P("3421"), Orientation(4, {2}, {})));
}

TEST_CASE("alignment is equivalent to pattern avoidance") {
  for (int n = 1; n <= 6; ++n) {
    const auto orientations = all_disjoint_orientations(n);
    for (const auto& pi : all_permutations(n))
      for (const auto& o : orientations) {
        const bool aligned = is_aligned(pi, o);
        REQUIRE(aligned == oracle::aligned(pi, o));
        REQUIRE(aligned == avoids_orientation_patterns(pi, o));
      }
  }
}

TEST_CASE("ninv statistics") {
  CHECK(ninv_stats(P("4321"), 2) == NinvStats{1, 2});
  CHECK(ninv_stats(P("4312"), 2) == NinvStats{0, 2});
  for (int j = 1; j <= 5; ++j)
    CHECK(ninv_stats(identity(5), j) == NinvStats{0, 0});
  CHECK_THROWS_AS(ninv_stats(identity(5), 6), std::invalid_argument);
  for (int n = 1; n <= 6; ++n)
    for (const auto& pi : all_permutations(n)) {
      int above = 0, below = 0;
      for (int j = 1; j <= n; ++j) {
        above += ninv_stats(pi, j).above;
        below += ninv_stats(pi, j).below;
      }
      REQUIRE(above == pi.length());
      REQUIRE(below == pi.length());
    }
}

TEST_CASE("evaluating words") {
  CHECK(evaluate(W(6, "3,5,2,1,3")) == P("413265"));
  CHECK(evaluate(W(6, "3,2,3")) == P("143256"));
  CHECK(evaluate(Word(4)) == identity(4));
  CHECK_THROWS_AS(W(4, "4"), std::invalid_argument);
  CHECK_THROWS_AS(W(4, "0"), std::invalid_argument);
  CHECK(W(4, "s2 s1 s3") == W(4, "2,1,3"));
  CHECK(W(4, "2,1,3").to_string() == "s2·s1·s3");
  CHECK(Word(4).to_string() == "ε");
}

TEST_CASE("evaluation agrees with a raw array product") {
  for (int n = 2; n <= 5; ++n)
    for (int len = 0; len <= 4; ++len) {
      std::vector<int> w(len, 1);
      while (true) {
        const Permutation pi = evaluate(Word(n, w));
        const std::vector<int> expected = oracle::product(n, w);
        REQUIRE(std::vector<int>(pi.one_line().begin(), pi.one_line().end()) == expected);
        int i = len - 1;
        while (i >= 0 && w[i] == n - 1)
          w[i--] = 1;
        if (i < 0)
          break;
        ++w[i];
      }
    }
}

TEST_CASE("reducedness") {
  CHECK_FALSE(is_reduced(W(3, "1,1")));
  CHECK(is_reduced(W(6, "3,5,2,1,3")));
  CHECK(is_reduced(W(4, "2,1,3,2,3")));
  CHECK(is_reduced(Word(3)));
}

TEST_CASE("reduced word counts") {
  CHECK(all_reduced_words(P("4321")).size() == 16);
  CHECK(all_reduced_words(P("4312")).size() == 5);
  const auto id = all_reduced_words(identity(4));
  REQUIRE(id.size() == 1);
  CHECK(id.front().empty());
  CHECK(all_reduced_words(P("54321")).size() == 768);
}

TEST_CASE("reduced word enumeration matches brute force") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& pi : all_permutations(n)) {
      std::set<std::vector<int>> got;
      for (const auto& w : all_reduced_words(pi))
        got.insert(std::vector<int>(w.begin(), w.end()));
      REQUIRE(got == oracle::reduced_words(pi));
    }
  for (const char* s : {"32145", "43215", "25314", "15342"}) {
    const Permutation pi = P(s);
    std::set<std::vector<int>> got;
    for (const auto& w : all_reduced_words(pi))
      got.insert(std::vector<int>(w.begin(), w.end()));
    CHECK(got == oracle::reduced_words(pi));
  }
}

TEST_CASE("length and reduced words") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& pi : all_permutations(n)) {
      REQUIRE(pi.length() == oracle::inversions(pi));
      REQUIRE(inversion_set(pi).size() == static_cast<std::size_t>(pi.length()));
      for (int l = 1; l <= n - 1; ++l) {
        const int d = pi.left_multiplied(l).length() - pi.length();
        REQUIRE((d == 1 || d == -1));
        REQUIRE((d == -1) == is_left_inversion(pi, l));
      }
      if (n > 5)
        continue;
      for_each_reduced_word(pi, [&](const Word& w) {
        REQUIRE(static_cast<int>(w.size()) == pi.length());
        REQUIRE(evaluate(w) == pi);
        REQUIRE(is_reduced(w));
      });
    }
}

TEST_CASE("setwise prefix fixing") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& pi : all_permutations(n))
      for (int k = -1; k <= n + 1; ++k)
        REQUIRE(pi.fixes_prefix(k) == (k <= 0 || k >= n || oracle::fixes_prefix(pi, k)));
}

TEST_CASE("stack sorting") {
  CHECK(stack_sort(P("132")) == P("123"));
  CHECK(stack_sort(P("231")) == P("213"));
  CHECK(stack_sort(identity(5)) == identity(5));
  for (int n = 1; n <= 7; ++n) {
    long long sortable = 0;
    for (const auto& pi : all_permutations(n)) {
      bool avoids = true;
      for (int j = 2; j <= n - 1; ++j)
        avoids = avoids && !oracle::contains(pi, j, Kind::Up);
      const bool sorted = stack_sort(pi).is_identity();
      REQUIRE(sorted == avoids);
      sortable += sorted;
    }
    CHECK(sortable == catalan(n));
  }
}

TEST_CASE("group structure") {
  for (const auto& pi : all_permutations(4)) {
    CHECK((pi * pi.inverse()).is_identity());
    for (int l = 1; l <= 3; ++l) {
      const Permutation s = evaluate(Word(4, {l}));
      CHECK(s * pi == pi.left_multiplied(l));
      CHECK(pi * s == pi.right_multiplied(l));
    }
  }
}

TEST_CASE("enumeration helpers") {
  CHECK(all_permutations(4).size() == 24);
  CHECK(all_permutations(1).size() == 1);
  CHECK(factorial(6) == 720);
  const long long expected[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (int n = 0; n <= 8; ++n) {
    // (1/(n+1)) binom(2n, n)
    long long binom = 1;
    for (int i = 1; i <= n; ++i)
      binom = binom * (n + i) / i;
    CHECK(catalan(n) == binom / (n + 1));
    CHECK(catalan(n) == expected[n]);
  }
}

TEST_CASE("orientations") {
  CHECK_THROWS_AS(Orientation(4, {1}, {}), std::invalid_argument);
  CHECK_THROWS_AS(Orientation(4, {}, {4}), std::invalid_argument);
  CHECK_THROWS_AS(Orientation(2, {2}, {}), std::invalid_argument);
  const Orientation o = Orientation::parse(5, "2", "4");
  CHECK(o.to_string() == "U={2} D={4}");
  CHECK(o.is_disjoint());
  CHECK_FALSE(o.is_partition());
  CHECK(Orientation::parse(5, "2,3", "4").is_partition());
  CHECK_FALSE(Orientation(4, {2}, {2}).is_disjoint());
  CHECK(Orientation::parse(4, "", "").to_string() == "U=∅ D=∅");
  CHECK(all_disjoint_orientations(5).size() == 27);
  CHECK(all_disjoint_orientations(2).size() == 1);
  CHECK(partition_orientations(5).size() == 8);
  for (const auto& p : partition_orientations(5))
    CHECK(p.is_partition());
}
