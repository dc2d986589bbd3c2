#include <omp.h>

#include <algorithm>

#include "search_internal.hpp"

namespace aps::select {

namespace {

// Chunks per worker; more chunks than threads evens out the dynamic schedule.
constexpr std::uint64_t kChunksPerWorker = 16;

}  // namespace

SearchResult exhaustive_search(const PerformanceMatrix& matrix, std::size_t size, SearchMode mode,
                               const SearchOptions& options) {
  const detail::EligibleSet set = detail::eligible_rows(matrix);
  const std::uint64_t total = detail::check_search(set, size, options.top_k);
  const detail::SubsetScorer scorer(set, options.variant);

  const int workers = options.workers > 0 ? options.workers : omp_get_max_threads();
  const std::uint64_t chunk_count =
      std::min<std::uint64_t>(total, static_cast<std::uint64_t>(workers) * kChunksPerWorker);
  std::vector<std::vector<detail::Candidate>> partial(chunk_count);

#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (std::int64_t chunk = 0; chunk < static_cast<std::int64_t>(chunk_count); ++chunk) {
    const auto c = __extension__ static_cast<unsigned __int128>(chunk);
    const auto lo = static_cast<std::uint64_t>(total * c / chunk_count);
    const auto hi = static_cast<std::uint64_t>(total * (c + 1) / chunk_count);

    std::vector<std::uint32_t> members = unrank_combination(lo, set.size(), size);
    std::vector<double> distances;
    std::vector<double> ranges;
    detail::TopK best(options.top_k, mode);
    for (std::uint64_t rank = lo; rank < hi; ++rank) {
      best.offer(scorer.score(members, distances, ranges), members);
      next_combination(members, set.size());
    }
    partial[static_cast<std::size_t>(chunk)] = best.take_sorted();
  }

  return detail::make_result(set, size, mode, total, detail::merge_sorted(std::move(partial), options.top_k, mode));
}

}  // namespace aps::select
