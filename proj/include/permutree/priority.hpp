#ifndef PERMUTREE_PRIORITY_HPP
#define PERMUTREE_PRIORITY_HPP

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "permutree/word.hpp"

namespace permutree {

/// A total order ≺ on the generators s_1, ..., s_{n-1}.
class PriorityOrder {
public:
  /// `order` lists the generator indices from most to least preferred.
  PriorityOrder(int n, std::vector<int> order);

  /// s_1 ≺ s_2 ≺ ⋯ ≺ s_{n-1}
  static PriorityOrder natural(int n);
  static PriorityOrder parse(int n, std::string_view text);
  static PriorityOrder random(int n, std::mt19937& rng);

  int degree() const noexcept { return degree_; }
  const std::vector<int>& order() const noexcept { return order_; }
  int rank(int letter) const { return rank_[letter]; }

  /// ≺-lexicographic comparison.
  bool less(const Word& a, const Word& b) const;

  /// The ≺-minimal letter satisfying `pred`, if any.
  template <typename Pred>
  std::optional<int> first(Pred&& pred) const {
    for (int l : order_)
      if (pred(l))
        return l;
    return std::nullopt;
  }

  std::string to_string() const;

  friend bool operator==(const PriorityOrder& a, const PriorityOrder& b) {
    return a.order_ == b.order_;
  }

private:
  int degree_;
  std::vector<int> order_;
  std::vector<int> rank_;
};

} // namespace permutree

#endif
