#include "permutree/verify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "permutree/automata.hpp"
#include "permutree/coxeter.hpp"
#include "permutree/patterns.hpp"
#include "permutree/priority.hpp"
#include "permutree/sorting.hpp"
#include "permutree/trees.hpp"
#include "permutree/word.hpp"

namespace permutree {

SuiteReport run_over_permutations(const std::string& suite, int n,
                                  const std::function<Tally(const Permutation&)>& check,
                                  unsigned workers) {
  const std::vector<Permutation> perms = all_permutations(n);
  std::vector<Tally> results(perms.size());
  if (workers == 0)
    workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(perms.size()));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < perms.size(); i = next++)
      results[i] = check(perms[i]);
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w)
    pool.emplace_back(work);
  work();
  for (auto& t : pool)
    t.join();

  SuiteReport report{suite, n, 0, {}, {}};
  for (auto& r : results) {
    report.checked += r.checked;
    for (auto& f : r.failures)
      report.failures.push_back(std::move(f));
  }
  return report;
}

namespace {

std::string describe(const Permutation& pi, const std::string& rest) {
  return "π=" + pi.to_string() + " " + rest;
}

Orientation single(int n, int j, Kind kind) {
  return kind == Kind::Up ? Orientation(n, {j}, {}) : Orientation(n, {}, {j});
}

std::string b(bool x) { return x ? "1" : "0"; }

// The moved orientation restricted to {2, ..., n-1}; n ∈ U and 1 ∈ D impose nothing.
Orientation clipped(int n, const std::set<int>& up, const std::set<int>& down) {
  std::set<int> u, d;
  for (int j : up)
    if (j >= 2 && j <= n - 1)
      u.insert(j);
  for (int j : down)
    if (j >= 2 && j <= n - 1)
      d.insert(j);
  return Orientation(n, std::move(u), std::move(d));
}

} // namespace

SuiteReport verify_theorem1(int n) {
  return run_over_permutations("theorem1", n, [n](const Permutation& pi) {
    Tally t;
    for (int j = 2; j <= n - 1; ++j)
      for (Kind kind : {Kind::Up, Kind::Down}) {
        const bool accepted = exists_accepted_exhaustive(pi, single(n, j, kind));
        const bool avoids = !contains_pattern(pi, j, kind);
        t.expect(accepted == avoids, describe(pi, to_string(kind) + "(" + std::to_string(j) +
                                                      "): accepted=" + b(accepted) +
                                                      " avoids=" + b(avoids)));
      }
    return t;
  });
}

SuiteReport verify_theorem2(int n) {
  const auto orientations = all_disjoint_orientations(n);
  auto report = run_over_permutations("theorem2", n, [&](const Permutation& pi) {
    Tally t;
    for (const auto& o : orientations) {
      const bool accepted = exists_accepted_exhaustive(pi, o);
      const bool avoids = avoids_orientation_patterns(pi, o);
      t.expect(accepted == avoids, describe(pi, o.to_string() + ": accepted=" + b(accepted) +
                                                    " avoids=" + b(avoids)));
    }
    return t;
  });
  report.notes.push_back(std::to_string(orientations.size()) + " disjoint orientations");
  return report;
}

SuiteReport verify_final_state(int n) {
  return run_over_permutations("final_state", n, [n](const Permutation& pi) {
    Tally t;
    for (int j = 2; j <= n - 1; ++j) {
      const NinvStats ninv = ninv_stats(pi, j);
      for (Kind kind : {Kind::Up, Kind::Down}) {
        const auto histogram = final_state_histogram(pi, kind, j);
        std::set<AutomatonState> accepted, all;
        for (const auto& [state, count] : histogram) {
          all.insert(state);
          if (state.accepting())
            accepted.insert(state);
        }
        const std::string where = to_string(kind) + "(" + std::to_string(j) + ")";
        t.expect(accepted.size() <= 1, describe(pi, where + ": accepted words end at " +
                                                        std::to_string(accepted.size()) + " states"));
        t.expect(accepted.empty() == contains_pattern(pi, j, kind),
                 describe(pi, where + ": acceptance disagrees with the pattern"));
        if (accepted.size() == 1) {
          const int expected = (kind == Kind::Up ? ninv.below : ninv.above) + 1;
          t.expect(accepted.begin()->column() == expected,
                   describe(pi, where + ": column " + std::to_string(accepted.begin()->column()) +
                                    ", expected " + std::to_string(expected)));
        }
        // For D(j) the roles of the two statistics swap.
        const int to_healthy = kind == Kind::Up ? ninv.above : ninv.below;
        const int to_common = kind == Kind::Up ? ninv.below : ninv.above;
        if (to_healthy == 0)
          t.expect(all.size() == 1 && all.begin()->status == Status::Healthy,
                   describe(pi, where + ": expected a single healthy final state"));
        if (to_common == 0)
          t.expect(all.size() == 1, describe(pi, where + ": expected a single final state"));
      }
    }
    return t;
  });
}

SuiteReport verify_counting(int n) {
  SuiteReport report{"counting", n, 0, {}, {}};
  const auto expected = static_cast<std::size_t>(catalan(n));
  for (const auto& o : partition_orientations(n)) {
    const std::size_t count = count_minimal(n, o);
    ++report.checked;
    if (count != expected)
      report.failures.push_back(o.to_string() + ": " + std::to_string(count) + " minimal, expected " +
                                std::to_string(expected));
  }
  const std::size_t all = count_minimal(n, Orientation::empty(n));
  ++report.checked;
  if (all != static_cast<std::size_t>(factorial(n)))
    report.failures.push_back("empty orientation: " + std::to_string(all) + " minimal");
  report.notes.push_back(std::to_string(partition_orientations(n).size()) +
                         " partition orientations, each with C_" + std::to_string(n) + " = " +
                         std::to_string(expected) + " minimal permutations");
  return report;
}

SuiteReport verify_csorting(int n) {
  SuiteReport report{"csorting", n, 0, {}, {}};
  const auto expected = static_cast<std::size_t>(catalan(n));
  const auto words = all_coxeter_words(n);
  for (const auto& c : words) {
    const CSortingReport r = verify_csorting_equivalences(n, c);
    report.checked += r.checked;
    for (const auto& line : r.json_lines())
      report.failures.push_back(line);
    if (r.all_true != expected)
      report.failures.push_back("c=" + c.to_string() + ": " + std::to_string(r.all_true) +
                                " sortable, expected " + std::to_string(expected));
  }
  report.notes.push_back(std::to_string(words.size()) + " Coxeter words");
  return report;
}

SuiteReport verify_stacksort(int n) {
  std::set<int> all;
  for (int j = 2; j <= n - 1; ++j)
    all.insert(j);
  const Orientation o(n, all, {});
  const PriorityOrder natural = PriorityOrder::natural(n);
  std::atomic<std::size_t> sortable{0};
  auto report = run_over_permutations("stacksort", n, [&](const Permutation& pi) {
    Tally t;
    const bool stack = stack_sort(pi).is_identity();
    bool avoids = true;
    for (int j = 2; j <= n - 1; ++j)
      avoids = avoids && !contains_pattern(pi, j, Kind::Up);
    const bool minimal = is_minimal(pi, o);
    const bool sorted = permutree_sort(pi, o, natural).success;
    t.expect(stack == avoids && avoids == minimal && minimal == sorted,
             describe(pi, "stack=" + b(stack) + " avoids231=" + b(avoids) + " minimal=" + b(minimal) +
                              " algorithm=" + b(sorted)));
    if (stack)
      ++sortable;
    return t;
  });
  ++report.checked;
  if (sortable != static_cast<std::size_t>(catalan(n)))
    report.failures.push_back(std::to_string(sortable.load()) + " stack-sortable, expected C_" +
                              std::to_string(n));
  report.notes.push_back(std::to_string(sortable.load()) + " stack-sortable permutations");
  return report;
}

SuiteReport verify_prefix(int n) {
  const auto orientations = all_disjoint_orientations(n);
  std::vector<PriorityOrder> orders{PriorityOrder::natural(n)};
  std::mt19937 rng(20241014u + static_cast<unsigned>(n));
  for (int i = 0; i < 3; ++i)
    orders.push_back(PriorityOrder::random(n, rng));

  auto report = run_over_permutations("prefix", n, [&](const Permutation& pi) {
    Tally t;
    for (const auto& o : orientations) {
      bool closed = true;
      for_each_reduced_word(pi, [&](const Word& w) {
        if (!run_product(o, w).accepting())
          return;
        ProductState s = initial_product(o);
        for (int l : w) {
          s = s.stepped(l);
          closed = closed && s.accepting();
        }
      });
      t.expect(closed, describe(pi, o.to_string() + ": accepted word with a rejected prefix"));

      for (const auto& order : orders) {
        const auto w = lexmin_word(pi, o, order);
        if (!w)
          continue;
        for (std::size_t k = 0; k < w->size(); ++k) {
          const Word p = w->prefix(k);
          const auto lp = lexmin_word(evaluate(p), o, order);
          t.expect(lp && *lp == p, describe(pi, o.to_string() + " " + order.to_string() +
                                                    ": prefix " + p.to_string() + " of " +
                                                    w->to_string() + " is not lex-minimal"));
        }
      }
    }
    return t;
  });
  std::string priorities;
  for (const auto& order : orders)
    priorities += (priorities.empty() ? "" : "; ") + order.to_string();
  report.notes.push_back("priorities: " + priorities);
  return report;
}

SuiteReport verify_algorithms(int n) {
  const auto orientations = all_disjoint_orientations(n);
  const PriorityOrder natural = PriorityOrder::natural(n);
  return run_over_permutations("algorithms", n, [&](const Permutation& pi) {
    Tally t;
    for (int j = 2; j <= n - 1; ++j) {
      for (Kind kind : {Kind::Up, Kind::Down}) {
        const SortTrace tr = sort_single(pi, j, kind, natural);
        const std::string where = to_string(kind) + "(" + std::to_string(j) + ")";
        const bool avoids = !contains_pattern(pi, j, kind);
        t.expect(accepts(kind, j, n, tr.word), describe(pi, where + ": output rejected"));
        t.expect(tr.success == avoids && avoids == (evaluate(tr.word) == pi),
                 describe(pi, where + ": success=" + b(tr.success) + " avoids=" + b(avoids)));
      }
      // Any left inversion other than the ill letter starts an accepted word.
      if (!contains_pattern(pi, j, Kind::Up)) {
        std::set<int> starts;
        for_each_reduced_word(pi, [&](const Word& w) {
          if (!w.empty() && accepts(Kind::Up, j, n, w))
            starts.insert(w[0]);
        });
        for (int l = 1; l <= n - 1; ++l)
          if (l != j - 1 && is_left_inversion(pi, l))
            t.expect(starts.count(l) == 1,
                     describe(pi, "U(" + std::to_string(j) + "): no accepted word starts with s" +
                                      std::to_string(l)));
      }
    }

    for (const auto& o : orientations) {
      const SortTrace tr = permutree_sort(pi, o, natural);
      const bool minimal = is_minimal(pi, o);
      ProductState s = initial_product(o);
      bool prefixes = true;
      for (int l : tr.word) {
        s = s.stepped(l);
        prefixes = prefixes && s.accepting();
      }
      t.expect(prefixes, describe(pi, o.to_string() + ": a prefix of the output is rejected"));
      t.expect(tr.success == minimal && minimal == (evaluate(tr.word) == pi),
               describe(pi, o.to_string() + ": success=" + b(tr.success) + " minimal=" + b(minimal)));
      if (minimal)
        for (const auto& step : tr.steps)
          t.expect(is_minimal(step.before, clipped(n, step.up, step.down)),
                   describe(pi, o.to_string() + ": passes through non-minimal " +
                                    step.before.to_string()));
    }
    return t;
  });
}

SuiteReport verify_networks(const Orientation& o) {
  const int n = o.degree();
  SuiteReport report{"networks", n, 0, {}, {}};
  std::vector<int> reversal(n);
  for (int i = 0; i < n; ++i)
    reversal[i] = n - i;
  const Permutation longest(reversal);
  std::size_t candidates = 0;
  std::vector<Word> valid;
  for_each_reduced_word(longest, [&](const Word& w) {
    ++candidates;
    if (!check_sorting_network(w, o))
      valid.push_back(w);
  });
  report.checked = candidates;
  if (valid.empty()) {
    report.notes.push_back("no valid network among " + std::to_string(candidates) +
                           " reduced words of " + longest.to_string());
  } else {
    report.notes.push_back(std::to_string(valid.size()) + " valid networks among " +
                           std::to_string(candidates) + " reduced words of " + longest.to_string() +
                           "; first " + valid.front().to_string());
  }
  return report;
}

const std::vector<SuiteInfo>& suite_catalogue() {
  static const std::vector<SuiteInfo> suites{
      {"theorem1", 6},  {"theorem2", 6}, {"final_state", 6}, {"counting", 8},  {"csorting", 6},
      {"stacksort", 8}, {"prefix", 6},   {"algorithms", 6},  {"networks", 6},
  };
  return suites;
}

std::optional<SuiteReport> run_suite(const std::string& name, int n,
                                     const std::optional<Orientation>& o) {
  if (name == "theorem1")
    return verify_theorem1(n);
  if (name == "theorem2")
    return verify_theorem2(n);
  if (name == "final_state")
    return verify_final_state(n);
  if (name == "counting")
    return verify_counting(n);
  if (name == "csorting")
    return verify_csorting(n);
  if (name == "stacksort")
    return verify_stacksort(n);
  if (name == "prefix")
    return verify_prefix(n);
  if (name == "algorithms")
    return verify_algorithms(n);
  if (name == "networks")
    return verify_networks(o ? *o : Orientation::empty(n));
  return std::nullopt;
}

} // namespace permutree
