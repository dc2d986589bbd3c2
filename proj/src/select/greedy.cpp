#include <algorithm>

#include "search_internal.hpp"

namespace aps::select {

SearchResult greedy_search(const PerformanceMatrix& matrix, std::size_t size, SearchMode mode,
                           metrics::VolumeRoot variant) {
  const detail::EligibleSet set = detail::eligible_rows(matrix);
  detail::check_search(set, size, 1);
  const detail::SubsetScorer scorer(set, variant);
  std::vector<double> distances;
  std::vector<double> ranges;

  // Seed: best pair over all pairs, same ordering as the exhaustive search.
  detail::TopK seed(1, mode);
  std::vector<std::uint32_t> pair{0, 1};
  std::uint64_t evaluated = 0;
  do {
    seed.offer(scorer.score(pair, distances, ranges), pair);
    ++evaluated;
  } while (next_combination(pair, set.size()));
  detail::Candidate current = seed.take_sorted().front();

  while (current.members.size() < size) {
    detail::Candidate step;
    bool found = false;
    for (std::uint32_t c = 0; c < set.size(); ++c) {
      if (std::binary_search(current.members.begin(), current.members.end(), c)) continue;
      detail::Candidate trial;
      trial.members = current.members;
      trial.members.insert(std::upper_bound(trial.members.begin(), trial.members.end(), c), c);
      trial.score = scorer.score(trial.members, distances, ranges);
      ++evaluated;
      if (!found || detail::better(trial, step, mode)) {
        step = std::move(trial);
        found = true;
      }
    }
    current = std::move(step);
  }
  return detail::make_result(set, size, mode, evaluated, {current});
}

}  // namespace aps::select
