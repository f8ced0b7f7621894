#ifndef PERMUTREE_ORIENTATION_HPP
#define PERMUTREE_ORIENTATION_HPP

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace permutree {

/// The permutree parameter (U, D): two subsets of {2, ..., n-1}.
class Orientation {
public:
  Orientation(int n, std::set<int> up, std::set<int> down);

  static Orientation empty(int n) { return Orientation(n, {}, {}); }

  /// Parses comma lists such as "2,4" ("" is the empty set).
  static Orientation parse(int n, std::string_view up, std::string_view down);

  int degree() const noexcept { return degree_; }
  const std::set<int>& up() const noexcept { return up_; }
  const std::set<int>& down() const noexcept { return down_; }

  bool is_disjoint() const;
  /// U and D partition {2, ..., n-1}.
  bool is_partition() const;

  /// "U={2} D={4}"
  std::string to_string() const;

  friend bool operator==(const Orientation&, const Orientation&) = default;
  friend auto operator<=>(const Orientation&, const Orientation&) = default;

private:
  int degree_;
  std::set<int> up_;
  std::set<int> down_;
};

/// "{2,4}" or "∅".
std::string format_set(const std::set<int>& s);

std::set<int> parse_int_set(std::string_view text);

/// The 3^{n-2} disjoint orientations, each of 2..n-1 being in U, in D or in neither.
std::vector<Orientation> all_disjoint_orientations(int n);

/// The 2^{n-2} orientations where (U, D) partitions {2, ..., n-1}.
std::vector<Orientation> partition_orientations(int n);

} // namespace permutree

#endif
