#include "permutree/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace permutree {

Permutation::Permutation(std::vector<int> one_line) : entries_(std::move(one_line)) {
  const int n = degree();
  if (n == 0)
    throw std::invalid_argument("permutation of degree 0");
  positions_.assign(n, 0);
  for (int p = 0; p < n; ++p) {
    const int v = entries_[p];
    if (v < 1 || v > n)
      throw std::invalid_argument("entry " + std::to_string(v) + " outside [1, " +
                                  std::to_string(n) + "]");
    if (positions_[v - 1] != 0)
      throw std::invalid_argument("value " + std::to_string(v) + " repeated");
    positions_[v - 1] = p + 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1)
    throw std::invalid_argument("degree must be at least 1");
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> values;
  const bool separated = text.find_first_of(" ,\t") != std::string_view::npos;
  if (separated) {
    std::string token;
    auto flush = [&] {
      if (!token.empty()) {
        values.push_back(std::stoi(token));
        token.clear();
      }
    };
    for (char ch : text) {
      if (ch == ' ' || ch == ',' || ch == '\t') {
        flush();
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        token.push_back(ch);
      } else {
        throw std::invalid_argument("unexpected character in permutation: '" +
                                    std::string(1, ch) + "'");
      }
    }
    flush();
  } else {
    for (char ch : text) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw std::invalid_argument("unexpected character in permutation: '" +
                                    std::string(1, ch) + "'");
      values.push_back(ch - '0');
    }
  }
  return Permutation(std::move(values));
}

bool Permutation::is_identity() const noexcept {
  for (int p = 0; p < degree(); ++p)
    if (entries_[p] != p + 1)
      return false;
  return true;
}

int Permutation::length() const noexcept {
  int count = 0;
  for (int p = 0; p < degree(); ++p)
    for (int q = p + 1; q < degree(); ++q)
      if (entries_[p] > entries_[q])
        ++count;
  return count;
}

bool Permutation::fixes_prefix(int k) const noexcept {
  if (k <= 0 || k >= degree())
    return true;
  int running_max = 0;
  for (int p = 0; p < k; ++p)
    running_max = std::max(running_max, entries_[p]);
  return running_max == k;
}

void Permutation::check_letter(int letter) const {
  if (letter < 1 || letter > degree() - 1)
    throw std::invalid_argument("generator s" + std::to_string(letter) +
                                " out of range for degree " + std::to_string(degree()));
}

Permutation Permutation::left_multiplied(int letter) const {
  check_letter(letter);
  Permutation result = *this;
  const int p = positions_[letter - 1];
  const int q = positions_[letter];
  std::swap(result.entries_[p - 1], result.entries_[q - 1]);
  std::swap(result.positions_[letter - 1], result.positions_[letter]);
  return result;
}

Permutation Permutation::right_multiplied(int letter) const {
  check_letter(letter);
  Permutation result = *this;
  const int a = entries_[letter - 1];
  const int b = entries_[letter];
  std::swap(result.entries_[letter - 1], result.entries_[letter]);
  std::swap(result.positions_[a - 1], result.positions_[b - 1]);
  return result;
}

Permutation Permutation::inverse() const { return Permutation(positions_); }

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree())
    throw std::invalid_argument("degree mismatch in product");
  std::vector<int> e(degree());
  for (int i = 1; i <= degree(); ++i)
    e[i - 1] = at(rhs.at(i));
  return Permutation(std::move(e));
}

std::string Permutation::to_string() const {
  std::string out;
  const bool compact = degree() < 10;
  for (int p = 0; p < degree(); ++p) {
    if (!compact && p > 0)
      out.push_back(' ');
    out += std::to_string(entries_[p]);
  }
  return out;
}

Permutation identity(int n) { return Permutation::identity(n); }

Permutation left_multiply(int letter, const Permutation& pi) { return pi.left_multiplied(letter); }

Permutation right_multiply(const Permutation& pi, int letter) {
  return pi.right_multiplied(letter);
}

std::vector<InversionPair> inversion_set(const Permutation& pi) {
  std::vector<InversionPair> result;
  const auto e = pi.one_line();
  for (std::size_t p = 0; p < e.size(); ++p)
    for (std::size_t q = p + 1; q < e.size(); ++q)
      if (e[p] > e[q])
        result.push_back({e[p], e[q]});
  std::sort(result.begin(), result.end());
  return result;
}

bool is_left_inversion(const Permutation& pi, int letter) {
  if (letter < 1 || letter > pi.degree() - 1)
    throw std::invalid_argument("generator s" + std::to_string(letter) + " out of range");
  return pi.position_of(letter + 1) < pi.position_of(letter);
}

NinvStats ninv_stats(const Permutation& pi, int value) {
  const int n = pi.degree();
  if (value < 1 || value > n)
    throw std::invalid_argument("value " + std::to_string(value) + " out of range");
  NinvStats stats{0, 0};
  const int pos = pi.position_of(value);
  for (int i = 1; i < value; ++i)
    if (pi.position_of(i) > pos)
      ++stats.above;
  for (int k = value + 1; k <= n; ++k)
    if (pi.position_of(k) < pos)
      ++stats.below;
  return stats;
}

namespace {

void stack_sort_into(std::span<const int> block, std::vector<int>& out) {
  if (block.empty())
    return;
  const auto top = std::max_element(block.begin(), block.end());
  const auto split = static_cast<std::size_t>(top - block.begin());
  stack_sort_into(block.subspan(0, split), out);
  stack_sort_into(block.subspan(split + 1), out);
  out.push_back(*top);
}

} // namespace

Permutation stack_sort(const Permutation& pi) {
  std::vector<int> out;
  out.reserve(pi.degree());
  stack_sort_into(pi.one_line(), out);
  return Permutation(std::move(out));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(e);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i)
    f *= i;
  return f;
}

long long catalan(int n) {
  // C_{m+1} = C_m * 2(2m+1) / (m+2)
  long long c = 1;
  for (int m = 0; m < n; ++m)
    c = c * 2 * (2 * m + 1) / (m + 2);
  return c;
}

} // namespace permutree
