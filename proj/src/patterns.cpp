#include "permutree/patterns.hpp"

#include <stdexcept>

namespace permutree {

std::string to_string(Kind kind) { return kind == Kind::Up ? "U" : "D"; }

std::optional<PatternWitness> find_pattern(const Permutation& pi, int j, Kind kind) {
  const int n = pi.degree();
  if (j < 2 || j > n - 1)
    throw std::invalid_argument("pattern middle value " + std::to_string(j) +
                                " outside {2, ..., n-1}");
  const int pj = pi.position_of(j);
  if (kind == Kind::Up) {
    // j first, then some k > j, then some i < j.
    int larger = 0;
    for (int p = pj + 1; p <= n; ++p) {
      const int v = pi.at(p);
      if (v > j && larger == 0)
        larger = p;
      else if (v < j && larger != 0)
        return PatternWitness{pj, larger, p};
    }
  } else {
    // some k > j, then some i < j, then j last.
    int larger = 0;
    for (int p = 1; p < pj; ++p) {
      const int v = pi.at(p);
      if (v > j && larger == 0)
        larger = p;
      else if (v < j && larger != 0)
        return PatternWitness{larger, p, pj};
    }
  }
  return std::nullopt;
}

bool contains_pattern(const Permutation& pi, int j, Kind kind) {
  return find_pattern(pi, j, kind).has_value();
}

bool avoids_orientation_patterns(const Permutation& pi, const Orientation& o) {
  for (int j : o.up())
    if (contains_pattern(pi, j, Kind::Up))
      return false;
  for (int j : o.down())
    if (contains_pattern(pi, j, Kind::Down))
      return false;
  return true;
}

bool is_aligned(const Permutation& pi, const Orientation& o) {
  // (a,b) with a > b is an inversion iff a appears before b.
  auto inverted = [&](int high, int low) { return pi.position_of(high) < pi.position_of(low); };
  const int n = pi.degree();
  for (int i = 1; i <= n; ++i)
    for (int k = i + 2; k <= n; ++k) {
      if (!inverted(k, i))
        continue;
      for (int j = i + 1; j < k; ++j) {
        if (o.up().count(j) && !inverted(k, j))
          return false;
        if (o.down().count(j) && !inverted(j, i))
          return false;
      }
    }
  return true;
}

} // namespace permutree
