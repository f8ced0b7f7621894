#include "permutree/automata.hpp"

#include <stdexcept>

namespace permutree {

std::string to_string(Status status) {
  switch (status) {
  case Status::Healthy:
    return "healthy";
  case Status::Ill:
    return "ill";
  case Status::Dead:
    return "dead";
  }
  return "?";
}

std::string AutomatonState::to_string() const {
  return permutree::to_string(status) + "@" + std::to_string(param);
}

AutomatonState initial_state(Kind kind, int j, int n) {
  if (n < 1 || j < 1 || j > n)
    throw std::invalid_argument("automaton parameter " + std::to_string(j) + " outside [1, " +
                                std::to_string(n) + "]");
  return AutomatonState{kind, j, n, j, Status::Healthy};
}

AutomatonState step(const AutomatonState& s, int letter) {
  if (letter < 1 || letter > s.degree - 1)
    throw std::invalid_argument("letter s" + std::to_string(letter) + " out of range");
  AutomatonState next = s;
  const int m = s.param;
  if (s.kind == Kind::Up) {
    if (s.status == Status::Healthy) {
      if (letter == m - 1)
        next.status = Status::Ill;
      else if (letter == m && m < s.degree)
        next.param = m + 1;
    } else if (s.status == Status::Ill && letter == m && m < s.degree) {
      next.status = Status::Dead;
    }
  } else {
    if (s.status == Status::Healthy) {
      if (letter == m)
        next.status = Status::Ill;
      else if (letter == m - 1 && m > 1)
        next.param = m - 1;
    } else if (s.status == Status::Ill && letter == m - 1 && m > 1) {
      next.status = Status::Dead;
    }
  }
  return next;
}

AutomatonState run(Kind kind, int j, int n, const Word& w) {
  if (w.degree() != n)
    throw std::invalid_argument("word degree does not match automaton degree");
  AutomatonState s = initial_state(kind, j, n);
  for (int l : w)
    s = step(s, l);
  return s;
}

bool accepts(Kind kind, int j, int n, const Word& w) { return run(kind, j, n, w).accepting(); }

std::vector<AutomatonState> all_states(Kind kind, int j, int n) {
  const AutomatonState start = initial_state(kind, j, n);
  std::vector<AutomatonState> out;
  auto column = [&](int m) {
    AutomatonState s = start;
    s.param = m;
    out.push_back(s);
    // The ill row needs the letter s_{m-1} (UP) or s_m (DOWN).
    const bool has_ill = kind == Kind::Up ? m >= 2 : m <= n - 1;
    if (!has_ill)
      return;
    s.status = Status::Ill;
    out.push_back(s);
    const bool has_dead = kind == Kind::Up ? m < n : m > 1;
    if (has_dead) {
      s.status = Status::Dead;
      out.push_back(s);
    }
  };
  if (kind == Kind::Up)
    for (int m = j; m <= n; ++m)
      column(m);
  else
    for (int m = j; m >= 1; --m)
      column(m);
  return out;
}

Status ProductState::classify() const noexcept {
  Status result = Status::Healthy;
  for (const auto& c : components_) {
    if (c.status == Status::Dead)
      return Status::Dead;
    if (c.status == Status::Ill)
      result = Status::Ill;
  }
  return result;
}

ProductState ProductState::stepped(int letter) const {
  std::vector<AutomatonState> next;
  next.reserve(components_.size());
  for (const auto& c : components_)
    next.push_back(step(c, letter));
  return ProductState(std::move(next));
}

Status classify(const ProductState& p) { return p.classify(); }

ProductState initial_product(const Orientation& o) {
  std::vector<AutomatonState> components;
  for (int j : o.up())
    components.push_back(initial_state(Kind::Up, j, o.degree()));
  for (int j : o.down())
    components.push_back(initial_state(Kind::Down, j, o.degree()));
  return ProductState(std::move(components));
}

ProductState step(const ProductState& p, int letter) { return p.stepped(letter); }

ProductState run_product(const Orientation& o, const Word& w) {
  if (w.degree() != o.degree())
    throw std::invalid_argument("word degree does not match orientation degree");
  ProductState p = initial_product(o);
  if (w.degree() < 2)
    return p;
  for (int l : w)
    p = p.stepped(l);
  return p;
}

bool exists_accepted_exhaustive(const Permutation& pi, const Orientation& o) {
  bool found = false;
  for_each_reduced_word(pi, [&](const Word& w) {
    if (!found && run_product(o, w).accepting())
      found = true;
  });
  return found;
}

namespace {

// ≺-ordered search over left descents. Every reduced expression has the same
// length, so the first complete path is the ≺-lexicographic minimum.
template <typename State>
bool search_accepted(const Permutation& pi, const State& state, const PriorityOrder& order,
                     Word& prefix, State& final_state) {
  if (pi.is_identity()) {
    final_state = state;
    return true;
  }
  for (int l : order.order()) {
    if (pi.position_of(l + 1) >= pi.position_of(l))
      continue;
    State next = step(state, l);
    if (!next.accepting())
      continue;
    prefix.push_back(l);
    if (search_accepted(pi.left_multiplied(l), next, order, prefix, final_state))
      return true;
    prefix.pop_back();
  }
  return false;
}

} // namespace

std::optional<Word> find_accepted_word(const Permutation& pi, const Orientation& o,
                                       const PriorityOrder& order) {
  if (o.degree() != pi.degree() || order.degree() != pi.degree())
    throw std::invalid_argument("degree mismatch");
  Word prefix(pi.degree());
  const ProductState start = initial_product(o);
  ProductState final_state = start;
  if (search_accepted(pi, start, order, prefix, final_state))
    return prefix;
  return std::nullopt;
}

bool exists_accepted(const Permutation& pi, const Orientation& o) {
  if (o.is_disjoint())
    return avoids_orientation_patterns(pi, o);
  return find_accepted_word(pi, o, PriorityOrder::natural(pi.degree())).has_value();
}

std::optional<AutomatonState> accepted_final_state(const Permutation& pi, Kind kind, int j) {
  const int n = pi.degree();
  const AutomatonState start = initial_state(kind, j, n);
  Word prefix(n);
  AutomatonState final_state = start;
  if (search_accepted(pi, start, PriorityOrder::natural(n), prefix, final_state))
    return final_state;
  return std::nullopt;
}

std::map<AutomatonState, std::size_t> final_state_histogram(const Permutation& pi, Kind kind,
                                                            int j) {
  const int n = pi.degree();
  std::map<AutomatonState, std::size_t> histogram;
  for_each_reduced_word(pi, [&](const Word& w) { ++histogram[run(kind, j, n, w)]; });
  return histogram;
}

} // namespace permutree
