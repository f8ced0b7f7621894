#include "permutree/priority.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace permutree {

PriorityOrder::PriorityOrder(int n, std::vector<int> order)
    : degree_(n), order_(std::move(order)), rank_(std::max(n, 1), -1) {
  if (n < 1)
    throw std::invalid_argument("degree must be at least 1");
  if (static_cast<int>(order_.size()) != n - 1)
    throw std::invalid_argument("priority order must rank all " + std::to_string(n - 1) +
                                " generators");
  for (std::size_t r = 0; r < order_.size(); ++r) {
    const int l = order_[r];
    if (l < 1 || l > n - 1 || rank_[l] != -1)
      throw std::invalid_argument("priority order is not a permutation of the generators");
    rank_[l] = static_cast<int>(r);
  }
}

PriorityOrder PriorityOrder::natural(int n) {
  std::vector<int> order(std::max(n - 1, 0));
  std::iota(order.begin(), order.end(), 1);
  return PriorityOrder(n, std::move(order));
}

PriorityOrder PriorityOrder::parse(int n, std::string_view text) {
  const Word w = Word::parse(n, text);
  return PriorityOrder(n, std::vector<int>(w.begin(), w.end()));
}

PriorityOrder PriorityOrder::random(int n, std::mt19937& rng) {
  std::vector<int> order(std::max(n - 1, 0));
  std::iota(order.begin(), order.end(), 1);
  std::shuffle(order.begin(), order.end(), rng);
  return PriorityOrder(n, std::move(order));
}

bool PriorityOrder::less(const Word& a, const Word& b) const {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [&](int x, int y) { return rank_[x] < rank_[y]; });
}

std::string PriorityOrder::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (i > 0)
      out += " ≺ ";
    out += "s" + std::to_string(order_[i]);
  }
  return out;
}

} // namespace permutree
