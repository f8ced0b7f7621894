#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "permutree/automata.hpp"

namespace permutree {

namespace {

std::string node_name(const AutomatonState& s) {
  return to_string(s.kind) + std::to_string(s.origin) + "_" + std::to_string(s.param) + "_" +
         to_string(s.status);
}

std::string node_name(const ProductState& p) {
  if (p.components().empty())
    return "P_empty";
  std::string out;
  for (std::size_t i = 0; i < p.components().size(); ++i) {
    if (i > 0)
      out += "__";
    out += node_name(p.components()[i]);
  }
  return out;
}

std::string node_label(const AutomatonState& s) {
  return to_string(s.status) + " " + std::to_string(s.param);
}

std::string node_label(const ProductState& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.components().size(); ++i) {
    if (i > 0)
      out += ", ";
    const auto& c = p.components()[i];
    out += to_string(c.kind) + std::to_string(c.origin) + ":" + c.to_string();
  }
  return out + ")";
}

template <typename State>
void write_graph(std::ostringstream& out, const std::string& title, const std::vector<State>& nodes,
                 const State& initial, int n) {
  out << "digraph \"" << title << "\" {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle];\n";
  out << "  start [shape=point];\n";
  for (const auto& s : nodes) {
    out << "  \"" << node_name(s) << "\" [label=\"" << node_label(s) << "\"";
    if (s.accepting())
      out << ", shape=doublecircle";
    out << "];\n";
  }
  out << "  start -> \"" << node_name(initial) << "\";\n";
  const std::set<State> known(nodes.begin(), nodes.end());
  for (const auto& s : nodes) {
    for (int l = 1; l <= n - 1; ++l) {
      const State t = step(s, l);
      if (t == s || !known.count(t))
        continue;
      out << "  \"" << node_name(s) << "\" -> \"" << node_name(t) << "\" [label=\"s" << l
          << "\"];\n";
    }
  }
  out << "}\n";
}

} // namespace

std::string export_dot(Kind kind, int j, int n) {
  const auto states = all_states(kind, j, n);
  std::ostringstream out;
  const std::string title = to_string(kind) + "(" + std::to_string(j) + ") n=" + std::to_string(n);
  write_graph(out, title, states, initial_state(kind, j, n), n);
  return out.str();
}

std::string export_dot_product(const Orientation& o, bool reachable_only) {
  const int n = o.degree();
  const ProductState initial = initial_product(o);
  std::vector<ProductState> nodes;
  if (reachable_only) {
    std::set<ProductState> seen{initial};
    std::deque<ProductState> queue{initial};
    while (!queue.empty()) {
      ProductState s = queue.front();
      queue.pop_front();
      nodes.push_back(s);
      for (int l = 1; l <= n - 1; ++l) {
        ProductState t = s.stepped(l);
        if (seen.insert(t).second)
          queue.push_back(t);
      }
    }
  } else {
    std::vector<std::vector<AutomatonState>> factors;
    for (int j : o.up())
      factors.push_back(all_states(Kind::Up, j, n));
    for (int j : o.down())
      factors.push_back(all_states(Kind::Down, j, n));
    std::vector<std::size_t> index(factors.size(), 0);
    auto advance = [&] {
      for (std::size_t f = factors.size(); f-- > 0;) {
        if (++index[f] < factors[f].size())
          return true;
        index[f] = 0;
      }
      return false;
    };
    do {
      std::vector<AutomatonState> tuple;
      for (std::size_t f = 0; f < factors.size(); ++f)
        tuple.push_back(factors[f][index[f]]);
      nodes.emplace_back(std::move(tuple));
    } while (advance());
  }
  std::ostringstream out;
  write_graph(out, "P(" + o.to_string() + ") n=" + std::to_string(n), nodes, initial, n);
  return out.str();
}

} // namespace permutree
