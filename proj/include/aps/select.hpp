#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aps/matrix.hpp"
#include "aps/metrics.hpp"

namespace aps::select {

enum class SearchMode { Max, Min };

std::string_view to_string(SearchMode mode) noexcept;

/// A scored set of datasets. Names are kept in canonical (sorted) order.
struct Selection {
  std::vector<DatasetId> datasets;
  double score = 0.0;
  std::size_t rank = 0;  // 1-based position in its result list
};

struct SearchResult {
  SearchMode mode = SearchMode::Max;
  std::size_t size = 0;
  std::uint64_t candidates_evaluated = 0;
  std::vector<Selection> top;  // best first; ties broken by the sorted name lists
};

struct SearchOptions {
  std::size_t top_k = 1;
  metrics::VolumeRoot variant = metrics::VolumeRoot::NthRoot;
  int workers = 0;  // 0 = OpenMP default
};

/// Diversity of the named datasets. Throws UnknownDataset, IncompleteDataset
/// and InvalidSelection (repeated name).
metrics::DiversityBreakdown score_selection(const PerformanceMatrix& matrix,
                                            std::span<const std::string> datasets,
                                            metrics::VolumeRoot variant = metrics::VolumeRoot::NthRoot);

/// Scores every `size`-subset of the complete rows and keeps the best
/// `top_k`. Combinations are split into contiguous rank ranges evaluated in
/// parallel; the merged result does not depend on the worker count.
/// Throws NoCompleteRows, SizeTooLarge and InvalidArgument.
SearchResult exhaustive_search(const PerformanceMatrix& matrix, std::size_t size, SearchMode mode,
                               const SearchOptions& options = {});

/// Single-threaded reference: enumerates combinations one by one and scores
/// each through metrics::diversity. Kept for cross-checking the parallel
/// kernel; results are identical.
SearchResult exhaustive_search_reference(const PerformanceMatrix& matrix, std::size_t size, SearchMode mode,
                                         const SearchOptions& options = {});

/// Best pair first, then repeatedly adds the dataset giving the best score.
/// Returns a single selection; never better than the exhaustive optimum.
SearchResult greedy_search(const PerformanceMatrix& matrix, std::size_t size, SearchMode mode,
                           metrics::VolumeRoot variant = metrics::VolumeRoot::NthRoot);

/// C(n, k). Throws SizeTooLarge when the value does not fit 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// The `rank`-th k-subset of {0..n-1} in lexicographic order.
std::vector<std::uint32_t> unrank_combination(std::uint64_t rank, std::size_t n, std::size_t k);

/// Advances to the next k-subset in lexicographic order; false after the last.
bool next_combination(std::span<std::uint32_t> members, std::size_t n);

}  // namespace aps::select
