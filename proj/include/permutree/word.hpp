#ifndef PERMUTREE_WORD_HPP
#define PERMUTREE_WORD_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permutree/permutation.hpp"

namespace permutree {

/// A word s_{i_1} ⋯ s_{i_k} in the simple transpositions of S_n.
class Word {
public:
  explicit Word(int n, std::vector<int> letters = {});

  /// "2,1,3" or "2 1 3"; a leading 's' on each letter is tolerated.
  static Word parse(int n, std::string_view text);

  int degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }
  std::span<const int> letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }
  int back() const { return letters_.back(); }

  void push_back(int letter);
  void pop_back() { letters_.pop_back(); }
  Word appended(int letter) const;
  Word prefix(std::size_t k) const;
  Word reversed() const;

  /// "s2·s1·s3", or "ε" for the empty word.
  std::string to_string() const;
  /// "2,1,3", or "" for the empty word.
  std::string to_list() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

private:
  int degree_;
  std::vector<int> letters_;
};

/// The product of the letters, read left to right.
Permutation evaluate(const Word& w);

bool is_reduced(const Word& w);

/// Every reduced expression of π, in lexicographic order. Exponential in
/// ℓ(π); intended for n <= 6.
std::vector<Word> all_reduced_words(const Permutation& pi);

/// Calls `visit` on each reduced expression of π without materializing the set.
template <typename Visitor>
void for_each_reduced_word(const Permutation& pi, Visitor&& visit);

namespace detail {

template <typename Visitor>
void reduced_words_rec(const Permutation& pi, Word& prefix, Visitor& visit) {
  if (pi.is_identity()) {
    visit(static_cast<const Word&>(prefix));
    return;
  }
  for (int l = 1; l < pi.degree(); ++l) {
    if (pi.position_of(l + 1) < pi.position_of(l)) {
      prefix.push_back(l);
      reduced_words_rec(pi.left_multiplied(l), prefix, visit);
      prefix.pop_back();
    }
  }
}

} // namespace detail

template <typename Visitor>
void for_each_reduced_word(const Permutation& pi, Visitor&& visit) {
  Word prefix(pi.degree());
  detail::reduced_words_rec(pi, prefix, visit);
}

} // namespace permutree

#endif
