#include "permutree/trace_format.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace permutree {

std::string to_string(Phase phase) {
  switch (phase) {
  case Phase::Healthy:
    return "healthy";
  case Phase::Ill:
    return "ill";
  case Phase::BlockSort:
    return "block";
  case Phase::Setwise:
    return "setwise";
  case Phase::Stuck:
    return "stuck";
  case Phase::Done:
    return "done";
  }
  return "?";
}

std::string format_checks(const SortStep& step) {
  if (!step.letter)
    return "";
  if (step.checks.empty())
    return ".";
  std::string out;
  for (std::size_t i = 0; i < step.checks.size(); ++i) {
    if (i > 0)
      out += ", ";
    if (!step.checks[i].holds)
      out += "✗";
    out += std::to_string(step.checks[i].k);
  }
  return out;
}

namespace {

// Terminal columns, not bytes: the table uses ·, ε, ∅ and ✗.
std::size_t display_width(const std::string& s) {
  std::size_t width = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80)
      ++width;
  return width;
}

std::string render(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths(rows.front().size(), 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c)
      widths[c] = std::max(widths[c], display_width(row[c]));
  std::ostringstream out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0)
        line += " | ";
      line += row[c];
      if (c + 1 < row.size())
        line.append(widths[c] - display_width(row[c]), ' ');
    }
    while (!line.empty() && line.back() == ' ')
      line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

std::string letter_text(const SortStep& step) {
  return step.letter ? std::to_string(*step.letter) : "";
}

} // namespace

std::string render_table(const SortTrace& trace) {
  std::vector<std::vector<std::string>> rows;
  if (trace.algorithm == Algorithm::Single) {
    rows.push_back({"π", "w", "j", "ℓ"});
    for (const auto& s : trace.steps)
      rows.push_back({s.before.to_string(), s.word_before.to_string(), std::to_string(s.token),
                      letter_text(s)});
  } else {
    rows.push_back({"π", "w", "U", "D", "ℓ", "k"});
    for (const auto& s : trace.steps)
      rows.push_back({s.before.to_string(), s.word_before.to_string(), format_set(s.up),
                      format_set(s.down), letter_text(s), format_checks(s)});
  }
  return render(rows);
}

nlohmann::json trace_to_json(const SortTrace& trace) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : trace.steps) {
    nlohmann::json row{{"pi", s.before.to_string()},
                       {"word", s.word_before.to_list()},
                       {"phase", to_string(s.phase)}};
    if (trace.algorithm == Algorithm::Single) {
      row["j"] = s.token;
    } else {
      row["U"] = std::vector<int>(s.up.begin(), s.up.end());
      row["D"] = std::vector<int>(s.down.begin(), s.down.end());
      nlohmann::json checks = nlohmann::json::array();
      for (const auto& c : s.checks)
        checks.push_back({{"k", c.k}, {"holds", c.holds}});
      row["checks"] = std::move(checks);
    }
    row["letter"] = s.letter ? nlohmann::json(*s.letter) : nlohmann::json(nullptr);
    steps.push_back(std::move(row));
  }
  nlohmann::json out{{"algorithm", trace.algorithm == Algorithm::Single ? "single" : "permutree"},
                     {"input", trace.input.to_string()},
                     {"word", trace.word.to_list()},
                     {"final", trace.final.to_string()},
                     {"success", trace.success},
                     {"steps", std::move(steps)}};
  if (trace.algorithm == Algorithm::Single)
    out["kind"] = to_string(trace.kind);
  return out;
}

} // namespace permutree
