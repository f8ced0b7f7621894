#include "permutree/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "permutree/automata.hpp"
#include "permutree/orientation.hpp"
#include "permutree/patterns.hpp"
#include "permutree/permutation.hpp"
#include "permutree/priority.hpp"
#include "permutree/sorting.hpp"
#include "permutree/trace_format.hpp"
#include "permutree/trees.hpp"
#include "permutree/verify.hpp"

namespace permutree {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 0;
  std::string u, d, priority, pi, kind = "U", algorithm = "permutree", suite, word;
  int j = 0;
  bool json = false, dot = false, overlay = false, product = false, reachable = false;
  bool candidate = false, single_pass = false;
};

Permutation read_permutation(const Options& opt) {
  Permutation pi = [&] {
    try {
      return Permutation::parse(opt.pi);
    } catch (const std::exception& e) {
      throw UsageError("not a permutation: '" + opt.pi + "' (" + e.what() + ")");
    }
  }();
  if (opt.n != 0 && opt.n != pi.degree())
    throw UsageError("permutation " + opt.pi + " has degree " + std::to_string(pi.degree()) +
                     " but --n is " + std::to_string(opt.n));
  return pi;
}

int require_n(const Options& opt) {
  if (opt.n < 1)
    throw UsageError("--n must be a positive degree");
  return opt.n;
}

Orientation read_orientation(int n, const Options& opt) {
  try {
    return Orientation::parse(n, opt.u, opt.d);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

Orientation read_disjoint(int n, const Options& opt) {
  Orientation o = read_orientation(n, opt);
  if (!o.is_disjoint())
    throw UsageError("U and D must be disjoint");
  return o;
}

PriorityOrder read_priority(int n, const Options& opt) {
  if (opt.priority.empty())
    return PriorityOrder::natural(n);
  try {
    return PriorityOrder::parse(n, opt.priority);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad --priority: ") + e.what());
  }
}

Kind read_kind(const Options& opt) {
  if (opt.kind == "U" || opt.kind == "u" || opt.kind == "up")
    return Kind::Up;
  if (opt.kind == "D" || opt.kind == "d" || opt.kind == "down")
    return Kind::Down;
  throw UsageError("--kind must be U or D");
}

int cmd_sort(const Options& opt, std::ostream& out) {
  const Permutation pi = read_permutation(opt);
  const int n = pi.degree();
  const PriorityOrder order = read_priority(n, opt);
  SortTrace trace = [&] {
    if (opt.algorithm == "single") {
      if (opt.j < 2 || opt.j > n - 1)
        throw UsageError("--j must lie in [2, n-1] for the single automaton sort");
      return sort_single(pi, opt.j, read_kind(opt), order);
    }
    if (opt.algorithm != "permutree")
      throw UsageError("--algorithm must be permutree or single");
    return permutree_sort(pi, read_disjoint(n, opt), order);
  }();
  if (opt.json) {
    out << trace_to_json(trace).dump(2) << '\n';
  } else {
    out << render_table(trace) << '\n';
    out << "word: " << trace.word.to_string() << '\n';
    if (trace.success)
      out << "sorted\n";
    else
      out << "stuck at " << trace.final.to_string() << '\n';
  }
  return trace.success ? 0 : 1;
}

int cmd_check(const Options& opt, std::ostream& out) {
  const Permutation pi = read_permutation(opt);
  const int n = pi.degree();
  const Orientation o = read_orientation(n, opt);
  std::vector<std::string> witnesses;
  auto scan = [&](const std::set<int>& js, Kind kind) {
    for (int j : js) {
      if (auto w = find_pattern(pi, j, kind)) {
        std::string values;
        for (int p : *w)
          values += std::to_string(pi.at(p)) + (n >= 10 ? " " : "");
        while (!values.empty() && values.back() == ' ')
          values.pop_back();
        witnesses.push_back("witness " + values + " (" + (kind == Kind::Up ? "jki" : "kij") +
                            ", j=" + std::to_string(j) + ", positions " + std::to_string((*w)[0]) +
                            "," + std::to_string((*w)[1]) + "," + std::to_string((*w)[2]) + ")");
      }
    }
  };
  scan(o.up(), Kind::Up);
  scan(o.down(), Kind::Down);
  if (opt.json) {
    out << nlohmann::json{{"pi", pi.to_string()},
                          {"minimal", witnesses.empty()},
                          {"witnesses", witnesses}}
               .dump(2)
        << '\n';
  } else {
    out << (witnesses.empty() ? "minimal" : "not minimal") << '\n';
    for (const auto& w : witnesses)
      out << w << '\n';
  }
  return witnesses.empty() ? 0 : 1;
}

int cmd_count(const Options& opt, bool orientation_given, std::ostream& out) {
  const int n = require_n(opt);
  if (orientation_given) {
    out << count_minimal(n, read_disjoint(n, opt)) << '\n';
    return 0;
  }
  std::vector<std::vector<std::string>> rows{{"U", "D", "count"}};
  nlohmann::json json = nlohmann::json::array();
  for (const auto& o : all_disjoint_orientations(n)) {
    const std::size_t c = count_minimal(n, o);
    rows.push_back({format_set(o.up()), format_set(o.down()), std::to_string(c)});
    json.push_back({{"U", std::vector<int>(o.up().begin(), o.up().end())},
                    {"D", std::vector<int>(o.down().begin(), o.down().end())},
                    {"count", c}});
  }
  if (opt.json) {
    out << json.dump(2) << '\n';
    return 0;
  }
  std::size_t w0 = 1, w1 = 1;
  auto width = [](const std::string& s) {
    std::size_t w = 0;
    for (unsigned char c : s)
      w += (c & 0xC0) != 0x80;
    return w;
  };
  for (const auto& r : rows) {
    w0 = std::max(w0, width(r[0]));
    w1 = std::max(w1, width(r[1]));
  }
  for (const auto& r : rows)
    out << r[0] << std::string(w0 - width(r[0]), ' ') << " | " << r[1]
        << std::string(w1 - width(r[1]), ' ') << " | " << r[2] << '\n';
  return 0;
}

int cmd_automaton(const Options& opt, std::ostream& out) {
  const int n = require_n(opt);
  if (opt.product) {
    out << export_dot_product(read_orientation(n, opt), opt.reachable);
    return 0;
  }
  if (opt.j < 1 || opt.j > n)
    throw UsageError("--j must lie in [1, n]");
  out << export_dot(read_kind(opt), opt.j, n);
  return 0;
}

int cmd_tree(const Options& opt, std::ostream& out) {
  const int n = require_n(opt);
  const Orientation o = read_disjoint(n, opt);
  const GeneratingTree tree = generating_tree(n, o, read_priority(n, opt));
  if (opt.json) {
    out << tree_to_json(tree).dump(2) << '\n';
  } else if (opt.dot || opt.overlay) {
    std::optional<WeakOrderDiagram> overlay;
    if (opt.overlay)
      overlay = weak_order_hasse(n);
    out << export_tree_dot(tree, overlay);
  } else {
    for (const auto& node : tree.nodes())
      out << node.pi.to_string() << "  " << node.word.to_string() << '\n';
    out << tree.size() << " nodes\n";
  }
  return 0;
}

int print_report(const SuiteReport& r, std::ostream& out) {
  out << "suite " << r.suite << " n=" << r.n << ": " << (r.ok() ? "PASS" : "FAIL") << " ("
      << r.checked << " checks";
  if (!r.ok())
    out << ", " << r.failures.size() << " failures";
  out << ")\n";
  for (const auto& note : r.notes)
    out << "  " << note << '\n';
  const std::size_t shown = std::min<std::size_t>(r.failures.size(), 20);
  for (std::size_t i = 0; i < shown; ++i)
    out << "  counterexample: " << r.failures[i] << '\n';
  if (shown < r.failures.size())
    out << "  ... " << r.failures.size() - shown << " more\n";
  return r.ok() ? 0 : 1;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const int n = opt.n == 0 ? 5 : opt.n;
  if (n < 1)
    throw UsageError("--n must be a positive degree");
  std::vector<SuiteInfo> selected;
  for (const auto& info : suite_catalogue())
    if (opt.suite == "all" || opt.suite == info.name)
      selected.push_back(info);
  if (selected.empty())
    throw UsageError("unknown suite '" + opt.suite + "'");
  for (const auto& info : selected)
    if (n > info.max_n)
      throw UsageError("suite " + info.name + " enumerates S_n and is limited to n <= " +
                       std::to_string(info.max_n));
  const Orientation o = read_disjoint(n, opt);
  int status = 0;
  for (const auto& info : selected)
    status = std::max(status, print_report(*run_suite(info.name, n, o), out));
  return status;
}

int cmd_network(const Options& opt, std::ostream& out) {
  const int n = require_n(opt);
  const Orientation o = read_disjoint(n, opt);
  Word tmpl(n);
  if (opt.candidate) {
    try {
      tmpl = healthy_chain_network(o);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  } else if (!opt.word.empty()) {
    try {
      tmpl = Word::parse(n, opt.word);
    } catch (const std::exception& e) {
      throw UsageError(std::string("bad --word: ") + e.what());
    }
  } else {
    throw UsageError("give --word or --candidate");
  }
  const auto reading = opt.single_pass ? NetworkReading::SinglePass : NetworkReading::Cyclic;
  if (reading == NetworkReading::Cyclic) {
    std::vector<bool> seen(n, false);
    for (int l : tmpl)
      seen[l] = true;
    for (int l = 1; l <= n - 1; ++l)
      if (!seen[l])
        throw UsageError("a cyclically read word must use every generator");
  }
  out << "word: " << tmpl.to_string() << '\n';
  const auto counterexample = check_sorting_network(tmpl, o, reading);
  if (!counterexample) {
    out << "valid network for " << o.to_string() << '\n';
    return 0;
  }
  out << "counterexample " << counterexample->to_string() << '\n';
  return 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Permutree sorting of permutations: automata, sorting traces, trees and checks."};
  app.name("permutree");
  app.require_subcommand(1);
  Options opt;

  auto add_degree = [&](CLI::App* sub) { sub->add_option("--n", opt.n, "degree of S_n"); };
  std::vector<CLI::Option*> orientation_flags;
  auto add_orientation = [&](CLI::App* sub) {
    orientation_flags.push_back(sub->add_option("--u", opt.u, "comma list for U, e.g. 2,4"));
    orientation_flags.push_back(sub->add_option("--d", opt.d, "comma list for D"));
  };
  auto add_priority = [&](CLI::App* sub) {
    sub->add_option("--priority", opt.priority, "generators from most to least preferred, e.g. 2,1,3");
  };

  auto* sort = app.add_subcommand("sort", "sort a permutation and print the trace");
  add_degree(sort);
  add_orientation(sort);
  add_priority(sort);
  sort->add_option("--algorithm", opt.algorithm, "permutree (default) or single");
  sort->add_option("--j", opt.j, "parameter of the single automaton");
  sort->add_option("--kind", opt.kind, "U or D, for --algorithm single");
  sort->add_flag("--json", opt.json, "JSON instead of a table");
  sort->add_option("pi", opt.pi, "permutation in one-line notation")->required();

  auto* check = app.add_subcommand("check", "test (U,D)-minimality and print witnesses");
  add_degree(check);
  add_orientation(check);
  check->add_flag("--json", opt.json, "JSON output");
  check->add_option("pi", opt.pi, "permutation in one-line notation")->required();

  auto* count = app.add_subcommand(
      "count", "count minimal permutations; without --u/--d, one row per disjoint orientation");
  add_degree(count);
  add_orientation(count);
  count->add_flag("--json", opt.json, "JSON output");

  auto* automaton = app.add_subcommand("automaton", "DOT for U(j), D(j) or P(U,D)");
  add_degree(automaton);
  add_orientation(automaton);
  automaton->add_option("--kind", opt.kind, "U or D");
  automaton->add_option("--j", opt.j, "automaton parameter");
  automaton->add_flag("--product", opt.product, "the product P(U,D) instead");
  automaton->add_flag("--reachable", opt.reachable, "only tuples reachable from the start");
  automaton->add_flag("--dot", opt.dot, "DOT output (the only format)");

  auto* tree = app.add_subcommand(
      "tree", "generating tree of lex-minimal accepted words. Edge colours by last letter: s1 "
              "blue, s2 red, s3 green, s4 orange, s5 purple, s6 brown, s7 cyan, s8 magenta, "
              "then repeating");
  add_degree(tree);
  add_orientation(tree);
  add_priority(tree);
  tree->add_flag("--dot", opt.dot, "DOT output");
  tree->add_flag("--overlay", opt.overlay, "DOT with the weak order drawn in gray");
  tree->add_flag("--json", opt.json, "JSON dump word -> permutation");

  auto* verify = app.add_subcommand("verify", "run an exhaustive verification suite");
  add_degree(verify);
  add_orientation(verify);
  std::string suites = "all";
  for (const auto& info : suite_catalogue())
    suites += ", " + info.name;
  verify->add_option("--suite", opt.suite, "one of: " + suites)->required();

  auto* network = app.add_subcommand("network", "check a word as a sorting network");
  add_degree(network);
  add_orientation(network);
  network->add_option("--word", opt.word, "candidate word, e.g. 3,2,1,3,2,1");
  network->add_flag("--candidate", opt.candidate,
                    "experimental: build a candidate from the healthy states of a single automaton");
  network->add_flag("--single-pass", opt.single_pass, "read the word once instead of cyclically");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  bool orientation_given = false;
  for (auto* f : orientation_flags)
    orientation_given = orientation_given || f->count() > 0;

  try {
    if (sort->parsed())
      return cmd_sort(opt, out);
    if (check->parsed())
      return cmd_check(opt, out);
    if (count->parsed())
      return cmd_count(opt, orientation_given, out);
    if (automaton->parsed())
      return cmd_automaton(opt, out);
    if (tree->parsed())
      return cmd_tree(opt, out);
    if (verify->parsed())
      return cmd_verify(opt, out);
    if (network->parsed())
      return cmd_network(opt, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

} // namespace permutree
