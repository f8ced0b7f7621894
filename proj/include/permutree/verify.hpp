#ifndef PERMUTREE_VERIFY_HPP
#define PERMUTREE_VERIFY_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "permutree/orientation.hpp"
#include "permutree/permutation.hpp"

namespace permutree {

struct SuiteReport {
  std::string suite;
  int n = 0;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes; ///< summary lines printed on success as well

  bool ok() const noexcept { return failures.empty(); }
};

/// Outcome of the checks run on one permutation.
struct Tally {
  std::size_t checked = 0;
  std::vector<std::string> failures;

  void expect(bool condition, const std::string& what) {
    ++checked;
    if (!condition)
      failures.push_back(what);
  }
};

/// Runs `check` on every π ∈ S_n across worker threads; failures are merged in
/// lexicographic order of π, so the report does not depend on scheduling.
SuiteReport run_over_permutations(const std::string& suite, int n,
                                  const std::function<Tally(const Permutation&)>& check,
                                  unsigned workers = 0);

SuiteReport verify_theorem1(int n);
SuiteReport verify_theorem2(int n);
SuiteReport verify_final_state(int n);
SuiteReport verify_counting(int n);
SuiteReport verify_csorting(int n);
SuiteReport verify_stacksort(int n);
/// Natural priority plus three seeded random priorities.
SuiteReport verify_prefix(int n);
SuiteReport verify_algorithms(int n);
/// Tests every reduced word of the longest element as a network for `o`.
SuiteReport verify_networks(const Orientation& o);

struct SuiteInfo {
  std::string name;
  int max_n; ///< runs above this bound are refused
};

const std::vector<SuiteInfo>& suite_catalogue();
/// nullopt for an unknown suite name; networks uses the orientation, the others ignore it.
std::optional<SuiteReport> run_suite(const std::string& name, int n,
                                     const std::optional<Orientation>& o = std::nullopt);

} // namespace permutree

#endif
