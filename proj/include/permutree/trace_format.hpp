#ifndef PERMUTREE_TRACE_FORMAT_HPP
#define PERMUTREE_TRACE_FORMAT_HPP

#include <string>

#include <json.hpp>

#include "permutree/sorting.hpp"

namespace permutree {

/// Columns π | w | j | ℓ for the single sort and π | w | U | D | ℓ | k for
/// the permutree sort. A plain step shows "." in the k column, a failed check "✗k".
std::string render_table(const SortTrace& trace);

/// The k column entry of one row.
std::string format_checks(const SortStep& step);

nlohmann::json trace_to_json(const SortTrace& trace);

std::string to_string(Phase phase);

} // namespace permutree

#endif
