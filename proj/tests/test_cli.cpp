#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "dot_parse.hpp"
#include "permutree/cli.hpp"

namespace {

struct Result {
  int status;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = permutree::run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::string last_line(const std::string& s) {
  std::string t = s;
  while (!t.empty() && t.back() == '\n')
    t.pop_back();
  return t.substr(t.rfind('\n') + 1);
}

} // namespace

TEST_CASE("sort") {
  const auto ok = run({"sort", "--n", "5", "--u", "2", "--d", "4", "54213"});
  CHECK(ok.status == 0);
  CHECK(ok.out.find("12345 | s3·s2·s1·s4·s3·s2·s1·s3") != std::string::npos);
  CHECK(last_line(ok.out) == "sorted");

  const auto stuck = run({"sort", "--n", "5", "--u", "2", "--d", "4", "15342"});
  CHECK(stuck.status == 1);
  CHECK(stuck.out.find("14235 | s2·s3·s4") != std::string::npos);
  CHECK(last_line(stuck.out) == "stuck at 14235");

  const auto bad = run({"sort", "--n", "4", "12344"});
  CHECK(bad.status == 2);
  CHECK(bad.err.find("not a permutation") != std::string::npos);

  CHECK(run({"sort", "--n", "5", "1234"}).status == 2);
  CHECK(run({"sort", "--u", "2", "--d", "2", "1234"}).status == 2);
  CHECK(run({"sort", "--u", "7", "1234"}).status == 2);
  CHECK(run({"sort"}).status == 2);
}

TEST_CASE("sort with one automaton, priorities and JSON") {
  const auto t = run({"sort", "--algorithm", "single", "--j", "2", "4231"});
  CHECK(t.status == 1);
  CHECK(last_line(t.out) == "stuck at 1243");
  CHECK(run({"sort", "--algorithm", "single", "--j", "2", "3421"}).status == 0);
  CHECK(run({"sort", "--algorithm", "single", "--j", "2", "--kind", "D", "3142"}).status == 1);
  CHECK(run({"sort", "--algorithm", "single", "--j", "2", "--kind", "D", "3421"}).status == 0);
  CHECK(run({"sort", "--algorithm", "single", "--j", "4", "3421"}).status == 2);
  CHECK(run({"sort", "--algorithm", "bogus", "3421"}).status == 2);

  const auto j = run({"sort", "--u", "3", "--d", "2", "--json", "3214"});
  CHECK(j.status == 0);
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["word"] == "1,2,1");
  CHECK(parsed["steps"].size() == 4);

  const auto p = run({"sort", "--u", "3", "--d", "2", "--priority", "3,2,1", "--json", "3214"});
  CHECK(p.status == 0);
  CHECK(nlohmann::json::parse(p.out)["success"] == true);
  CHECK(run({"sort", "--priority", "1,1,2", "3214"}).status == 2);
}

TEST_CASE("check") {
  const auto m = run({"check", "--n", "5", "--u", "3", "42135"});
  CHECK(m.status == 0);
  CHECK(m.out == "minimal\n");
  const auto nm = run({"check", "--n", "5", "--d", "3", "42135"});
  CHECK(nm.status == 1);
  CHECK(nm.out.rfind("not minimal\nwitness 423 ", 0) == 0);
  CHECK(run({"check", "--n", "4", "1234"}).out == "minimal\n");
}

TEST_CASE("count") {
  CHECK(run({"count", "--n", "4", "--u", "2,3"}).out == "14\n");
  CHECK(run({"count", "--n", "4", "--u", "", "--d", ""}).out == "24\n");
  const auto table = run({"count", "--n", "4"});
  CHECK(table.status == 0);
  std::istringstream in(table.out);
  std::string line;
  int rows = 0, fourteen = 0;
  std::getline(in, line);
  while (std::getline(in, line)) {
    ++rows;
    fourteen += line.substr(line.rfind('|') + 2) == "14";
  }
  CHECK(rows == 9);
  CHECK(fourteen == 4);
  CHECK(run({"count"}).status == 2);
  CHECK(run({"count", "--n", "4", "--u", "2", "--d", "2"}).status == 2);
}

TEST_CASE("automaton and tree output") {
  const auto u = run({"automaton", "--kind", "U", "--j", "4", "--n", "6", "--dot"});
  CHECK(u.status == 0);
  CHECK(u.out.rfind("digraph", 0) == 0);
  const auto p = run({"automaton", "--product", "--u", "4", "--d", "2", "--n", "5", "--dot"});
  CHECK(dot::parse(p.out).nodes.size() == 25);
  CHECK(run({"automaton", "--kind", "X", "--j", "2", "--n", "4"}).status == 2);
  CHECK(run({"automaton", "--j", "9", "--n", "4"}).status == 2);

  const auto t = run({"tree", "--n", "4", "--u", "2", "--dot"});
  CHECK(t.status == 0);
  CHECK(dot::parse(t.out).nodes.size() == 18);
  CHECK(dot::parse(run({"tree", "--n", "4", "--u", "2", "--overlay"}).out).nodes.size() == 24);
  const auto j = nlohmann::json::parse(run({"tree", "--n", "4", "--u", "2,3", "--json"}).out);
  CHECK(j["size"] == 14);
  CHECK(last_line(run({"tree", "--n", "4"}).out) == "24 nodes");
}

TEST_CASE("verify and network") {
  const auto r = run({"verify", "--suite", "theorem1", "--n", "4"});
  CHECK(r.status == 0);
  CHECK(r.out.rfind("suite theorem1 n=4: PASS", 0) == 0);
  const auto nw = run({"verify", "--suite", "networks", "--n", "5", "--u", "2", "--d", "4"});
  CHECK(nw.status == 0);
  CHECK(nw.out.find("no valid network among 768 reduced words of 54321") != std::string::npos);
  CHECK(run({"verify", "--suite", "csorting", "--n", "4"}).status == 0);
  CHECK(run({"verify", "--suite", "theorem2", "--n", "7"}).status == 2);
  CHECK(run({"verify", "--suite", "nope"}).status == 2);

  CHECK(run({"network", "--n", "4", "--u", "2", "--word", "3,2,1,3,2,1"}).status == 0);
  const auto single = run({"network", "--n", "4", "--u", "2", "--word", "3,2,1,3,2,1", "--single-pass"});
  CHECK(single.status == 1);
  CHECK(last_line(single.out) == "counterexample 3421");
  CHECK(run({"network", "--n", "4", "--u", "2", "--candidate"}).status == 0);
  CHECK(run({"network", "--n", "5", "--u", "2", "--d", "4", "--candidate"}).status == 2);
  CHECK(run({"network", "--n", "4", "--u", "2", "--word", "3,2"}).status == 2);
}

TEST_CASE("help and usage errors") {
  const auto h = run({"--help"});
  CHECK(h.status == 0);
  CHECK(h.out.find("sort") != std::string::npos);
  CHECK(run({}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
}
