#ifndef PERMUTREE_PERMUTATION_HPP
#define PERMUTREE_PERMUTATION_HPP

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace permutree {

/// A permutation of [n] in one-line notation. Values and positions are
/// 1-indexed; the inverse is cached so that position lookups are O(1).
class Permutation {
public:
  /// Throws std::invalid_argument unless `one_line` is a bijection on [n].
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);

  /// Accepts "3421" (one digit per entry) or "3 4 2 1" / "3,4,2,1".
  static Permutation parse(std::string_view text);

  int degree() const noexcept { return static_cast<int>(entries_.size()); }

  /// π(position)
  int at(int position) const { return entries_[position - 1]; }
  /// π⁻¹(value)
  int position_of(int value) const { return positions_[value - 1]; }

  std::span<const int> one_line() const noexcept { return entries_; }

  bool is_identity() const noexcept;
  int length() const noexcept;

  /// π([k]) = [k]. Vacuously true for k <= 0 and k >= n.
  bool fixes_prefix(int k) const noexcept;

  /// s_l · π: exchanges the values l and l+1.
  Permutation left_multiplied(int letter) const;
  /// π · s_l: exchanges the entries at positions l and l+1.
  Permutation right_multiplied(int letter) const;

  Permutation inverse() const;

  /// Group product, (σ·τ)(i) = σ(τ(i)).
  Permutation operator*(const Permutation& rhs) const;

  /// Digits run together when n < 10, otherwise space separated.
  std::string to_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.entries_ == b.entries_;
  }
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.entries_ <=> b.entries_;
  }

private:
  void check_letter(int letter) const;

  std::vector<int> entries_;
  std::vector<int> positions_;
};

struct InversionPair {
  int high;
  int low;

  friend auto operator<=>(const InversionPair&, const InversionPair&) = default;
};

struct NinvStats {
  int above; ///< |{(j,i) : i < j, j before i}|
  int below; ///< |{(k,j) : k > j, k before j}|

  friend bool operator==(const NinvStats&, const NinvStats&) = default;
};

Permutation identity(int n);
Permutation left_multiply(int letter, const Permutation& pi);
Permutation right_multiply(const Permutation& pi, int letter);

/// Pairs (π_p, π_q) with p < q and π_p > π_q, sorted by (high, low).
std::vector<InversionPair> inversion_set(const Permutation& pi);

/// The values l and l+1 are reversed in π, i.e. ℓ(s_l·π) = ℓ(π) − 1.
bool is_left_inversion(const Permutation& pi, int letter);

NinvStats ninv_stats(const Permutation& pi, int value);

/// Knuth's stack sort, S(τ n ρ) = S(τ) S(ρ) n.
Permutation stack_sort(const Permutation& pi);

/// All of S_n in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int n);

long long factorial(int n);
long long catalan(int n);

} // namespace permutree

#endif
