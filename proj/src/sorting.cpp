#include "permutree/sorting.hpp"

#include <algorithm>
#include <stdexcept>

namespace permutree {

std::set<int> move_u(std::set<int> up, int letter) {
  if (up.erase(letter))
    up.insert(letter + 1);
  return up;
}

std::set<int> move_d(std::set<int> down, int letter) {
  if (down.erase(letter + 1))
    down.insert(letter);
  return down;
}

namespace {

void check_degrees(const Permutation& pi, const PriorityOrder& order) {
  if (order.degree() != pi.degree())
    throw std::invalid_argument("priority order degree does not match the permutation");
}

bool reversed(const Permutation& pi, int l) { return pi.position_of(l + 1) < pi.position_of(l); }

std::optional<int> min_descent(const Permutation& pi, const PriorityOrder& order,
                               auto&& admissible) {
  return order.first([&](int l) { return admissible(l) && reversed(pi, l); });
}

struct SingleRun {
  SortTrace& trace;
  Permutation pi;
  Word word;
  int j;

  void apply(int l, Phase phase) {
    SortStep row{pi, word, j, {}, {}, l, phase, {}};
    trace.steps.push_back(std::move(row));
    pi = pi.left_multiplied(l);
    word.push_back(l);
  }
};

} // namespace

SortTrace sort_single(const Permutation& pi, int j, Kind kind, const PriorityOrder& order) {
  const int n = pi.degree();
  if (j < 2 || j > n - 1)
    throw std::invalid_argument("j must lie in [2, n-1]");
  check_degrees(pi, order);

  SortTrace trace{Algorithm::Single, kind, pi, {}, Word(n), pi, false};
  SingleRun run{trace, pi, Word(n), j};
  const bool up = kind == Kind::Up;

  // The letter that would make the automaton ill, and the one that advances it.
  auto ill_letter = [&] { return up ? run.j - 1 : run.j; };
  auto forward_letter = [&] { return up ? run.j : run.j - 1; };

  while (auto l = min_descent(run.pi, order, [&](int x) { return x != ill_letter(); })) {
    const bool advance = *l == forward_letter();
    run.apply(*l, Phase::Healthy);
    if (advance)
      run.j += up ? 1 : -1;
  }

  if (reversed(run.pi, ill_letter()))
    run.apply(ill_letter(), Phase::Ill);
  // The block boundary: values [b] and [n] \ [b].
  const int b = up ? run.j : run.j - 1;
  while (auto l = min_descent(run.pi, order, [&](int x) { return x < b; }))
    run.apply(*l, Phase::BlockSort);
  while (auto l = min_descent(run.pi, order, [&](int x) { return x > b; }))
    run.apply(*l, Phase::BlockSort);

  trace.steps.push_back(SortStep{run.pi, run.word, run.j, {}, {}, std::nullopt, Phase::Done, {}});
  trace.word = run.word;
  trace.final = run.pi;
  trace.success = run.pi.is_identity();
  return trace;
}

namespace {

// One level of the recursion: records the row for π and recurses on s_l·π.
void permutree_rec(const Permutation& pi, const std::set<int>& up, const std::set<int>& down,
                   const PriorityOrder& order, Word& word, std::vector<SortStep>& steps) {
  auto free_letter = [&](int l) { return !up.count(l + 1) && !down.count(l); };
  if (auto l = min_descent(pi, order, free_letter)) {
    steps.push_back(SortStep{pi, word, 0, up, down, *l, Phase::Healthy, {}});
    word.push_back(*l);
    permutree_rec(pi.left_multiplied(*l), move_u(up, *l), move_d(down, *l), order, word, steps);
    return;
  }

  auto checks_for = [&](int l) {
    std::vector<SetwiseCheck> checks;
    if (down.count(l))
      checks.push_back({l - 1, pi.fixes_prefix(l - 1)});
    if (up.count(l + 1))
      checks.push_back({l + 1, pi.fixes_prefix(l + 1)});
    return checks;
  };
  auto all_hold = [](const std::vector<SetwiseCheck>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const SetwiseCheck& c) { return c.holds; });
  };

  if (auto l = min_descent(pi, order, [&](int x) { return all_hold(checks_for(x)); })) {
    steps.push_back(SortStep{pi, word, 0, up, down, *l, Phase::Setwise, checks_for(*l)});
    std::set<int> next_up = up;
    std::set<int> next_down = down;
    next_up.erase(*l + 1);
    next_down.erase(*l);
    word.push_back(*l);
    permutree_rec(pi.left_multiplied(*l), move_u(std::move(next_up), *l),
                  move_d(std::move(next_down), *l), order, word, steps);
    return;
  }

  if (auto l = min_descent(pi, order, [](int) { return true; })) {
    steps.push_back(SortStep{pi, word, 0, up, down, *l, Phase::Stuck, checks_for(*l)});
    return;
  }
  steps.push_back(SortStep{pi, word, 0, up, down, std::nullopt, Phase::Done, {}});
}

} // namespace

SortTrace permutree_sort(const Permutation& pi, const Orientation& o, const PriorityOrder& order) {
  if (o.degree() != pi.degree())
    throw std::invalid_argument("orientation degree does not match the permutation");
  if (!o.is_disjoint())
    throw std::invalid_argument("permutree sorting needs U and D to be disjoint");
  check_degrees(pi, order);

  SortTrace trace{Algorithm::Permutree, Kind::Up, pi, {}, Word(pi.degree()), pi, false};
  Word word(pi.degree());
  permutree_rec(pi, o.up(), o.down(), order, word, trace.steps);
  trace.word = word;
  trace.final = trace.steps.back().before;
  trace.success = trace.final.is_identity();
  return trace;
}

bool is_minimal(const Permutation& pi, const Orientation& o) {
  return avoids_orientation_patterns(pi, o);
}

Extraction greedy_extraction(const Permutation& pi, const Word& tmpl, bool repeat) {
  const int n = pi.degree();
  if (tmpl.degree() != n)
    throw std::invalid_argument("template degree does not match the permutation");
  if (repeat) {
    std::vector<bool> present(n, false);
    for (int l : tmpl)
      present[l] = true;
    for (int l = 1; l <= n - 1; ++l)
      if (!present[l])
        throw std::invalid_argument("a repeated template must contain every generator; s" +
                                    std::to_string(l) + " is missing");
  }

  Extraction ex{Word(n), pi, {}};
  do {
    if (ex.residual.is_identity())
      break;
    std::set<int> taken;
    for (int l : tmpl) {
      if (!reversed(ex.residual, l))
        continue;
      ex.residual = ex.residual.left_multiplied(l);
      ex.word.push_back(l);
      taken.insert(l);
    }
    if (!taken.empty())
      ex.passes.push_back(std::move(taken));
  } while (repeat);
  return ex;
}

std::optional<Word> greedy_subword(const Permutation& pi, const Word& tmpl, bool repeat) {
  Extraction ex = greedy_extraction(pi, tmpl, repeat);
  if (!ex.residual.is_identity())
    return std::nullopt;
  return ex.word;
}

bool refutes_network(const Permutation& pi, const Word& tmpl, const Orientation& o,
                     NetworkReading reading) {
  const auto word = greedy_subword(pi, tmpl, reading == NetworkReading::Cyclic);
  const bool decided_minimal = word && run_product(o, *word).accepting();
  return decided_minimal != is_minimal(pi, o);
}

std::optional<Permutation> check_sorting_network(const Word& tmpl, const Orientation& o,
                                                 NetworkReading reading) {
  if (tmpl.degree() != o.degree())
    throw std::invalid_argument("template degree does not match the orientation");
  for (const Permutation& pi : all_permutations(o.degree()))
    if (refutes_network(pi, tmpl, o, reading))
      return pi;
  return std::nullopt;
}

Word healthy_chain_network(const Orientation& o) {
  const int n = o.degree();
  if (o.up().size() + o.down().size() != 1)
    throw std::invalid_argument("the healthy chain construction needs |U| + |D| = 1");
  const bool up = o.down().empty();
  const int j = up ? *o.up().begin() : *o.down().begin();

  Word out(n);
  for (int m = j; up ? m < n : m > 1; m += up ? 1 : -1) {
    const int ill = up ? m - 1 : m;
    const int forward = up ? m : m - 1;
    std::vector<int> loops;
    for (int l = n - 1; l >= 1; --l)
      if (l != ill && l != forward)
        loops.push_back(l);
    for (std::size_t rep = 0; rep < loops.size(); ++rep)
      for (int l : loops)
        out.push_back(l);
    out.push_back(forward);
  }
  std::vector<bool> present(n, false);
  for (int l : out)
    present[l] = true;
  for (int l = n - 1; l >= 1; --l)
    if (!present[l])
      out.push_back(l);
  return out;
}

} // namespace permutree
