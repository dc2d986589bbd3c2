#include <algorithm>
#include <numeric>

#include "search_internal.hpp"

namespace aps::select {

SearchResult exhaustive_search_reference(const PerformanceMatrix& matrix, std::size_t size, SearchMode mode,
                                         const SearchOptions& options) {
  const detail::EligibleSet set = detail::eligible_rows(matrix);
  const std::uint64_t total = detail::check_search(set, size, options.top_k);

  std::vector<metrics::Point> points;
  for (std::size_t i = 0; i < set.size(); ++i) {
    auto p = set.point(i);
    points.emplace_back(p.begin(), p.end());
  }

  std::vector<detail::Candidate> all;
  all.reserve(static_cast<std::size_t>(total));
  std::vector<std::uint32_t> members(size);
  std::iota(members.begin(), members.end(), 0u);
  std::uint64_t evaluated = 0;
  std::vector<metrics::Point> chosen(size);
  do {
    for (std::size_t i = 0; i < size; ++i) chosen[i] = points[members[i]];
    all.push_back({metrics::diversity(chosen, set.dimensions, options.variant).score, members});
    ++evaluated;
  } while (next_combination(members, set.size()));

  std::sort(all.begin(), all.end(),
            [mode](const detail::Candidate& a, const detail::Candidate& b) { return detail::better(a, b, mode); });
  if (all.size() > options.top_k) all.resize(options.top_k);
  return detail::make_result(set, size, mode, evaluated, all);
}

}  // namespace aps::select
