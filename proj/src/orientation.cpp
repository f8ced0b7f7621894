#include "permutree/orientation.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <stdexcept>

namespace permutree {

namespace {

void check_members(int n, const std::set<int>& s, const char* name) {
  for (int j : s)
    if (j < 2 || j > n - 1)
      throw std::invalid_argument(std::string(name) + " contains " + std::to_string(j) +
                                  ", outside {2, ..., " + std::to_string(n - 1) + "}");
}

} // namespace

Orientation::Orientation(int n, std::set<int> up, std::set<int> down)
    : degree_(n), up_(std::move(up)), down_(std::move(down)) {
  if (n < 1)
    throw std::invalid_argument("degree must be at least 1");
  check_members(n, up_, "U");
  check_members(n, down_, "D");
}

Orientation Orientation::parse(int n, std::string_view up, std::string_view down) {
  return Orientation(n, parse_int_set(up), parse_int_set(down));
}

bool Orientation::is_disjoint() const {
  return std::none_of(up_.begin(), up_.end(), [&](int j) { return down_.count(j) > 0; });
}

bool Orientation::is_partition() const {
  if (!is_disjoint())
    return false;
  return static_cast<int>(up_.size() + down_.size()) == std::max(0, degree_ - 2);
}

std::string Orientation::to_string() const {
  return "U=" + format_set(up_) + " D=" + format_set(down_);
}

std::string format_set(const std::set<int>& s) {
  if (s.empty())
    return "∅";
  std::string out = "{";
  for (auto it = s.begin(); it != s.end(); ++it) {
    if (it != s.begin())
      out += ",";
    out += std::to_string(*it);
  }
  return out + "}";
}

std::set<int> parse_int_set(std::string_view text) {
  std::set<int> out;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) {
      out.insert(std::stoi(token));
      token.clear();
    }
  };
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch)))
      token.push_back(ch);
    else if (ch == ',' || ch == ' ' || ch == '{' || ch == '}')
      flush();
    else
      throw std::invalid_argument("unexpected character in set: '" + std::string(1, ch) + "'");
  }
  flush();
  return out;
}

std::vector<Orientation> all_disjoint_orientations(int n) {
  const int m = std::max(0, n - 2);
  int total = 1;
  for (int i = 0; i < m; ++i)
    total *= 3;
  std::vector<Orientation> out;
  out.reserve(total);
  for (int code = 0; code < total; ++code) {
    std::set<int> up, down;
    int c = code;
    for (int j = 2; j <= n - 1; ++j) {
      if (c % 3 == 1)
        up.insert(j);
      else if (c % 3 == 2)
        down.insert(j);
      c /= 3;
    }
    out.emplace_back(n, std::move(up), std::move(down));
  }
  return out;
}

std::vector<Orientation> partition_orientations(int n) {
  std::vector<Orientation> out;
  for (const auto& o : all_disjoint_orientations(n))
    if (o.is_partition())
      out.push_back(o);
  return out;
}

} // namespace permutree
