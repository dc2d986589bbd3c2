#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "aps/select.hpp"

namespace aps::select::detail {

/// Complete rows in canonical order (sorted by dataset name) as dense points.
struct EligibleSet {
  std::vector<DatasetId> ids;
  std::vector<double> coords;  // ids.size() x dimensions, row-major
  std::size_t dimensions = 0;

  std::size_t size() const noexcept { return ids.size(); }
  std::span<const double> point(std::size_t i) const { return {coords.data() + i * dimensions, dimensions}; }
};

EligibleSet eligible_rows(const PerformanceMatrix& matrix);

/// Shared precondition checks; returns C(eligible, size).
std::uint64_t check_search(const EligibleSet& set, std::size_t size, std::size_t top_k);

struct Candidate {
  double score = 0.0;
  std::vector<std::uint32_t> members;
};

/// Strict total order: higher (Max) or lower (Min) score first, then the
/// lexicographically smaller member list. Members index the sorted name
/// list, so index order and name order agree.
inline bool better(const Candidate& a, const Candidate& b, SearchMode mode) {
  if (a.score != b.score) return mode == SearchMode::Max ? a.score > b.score : a.score < b.score;
  return a.members < b.members;
}

/// Bounded heap keeping the best `capacity` candidates; the worst sits on top.
class TopK {
 public:
  TopK(std::size_t capacity, SearchMode mode) : capacity_(capacity), mode_(mode) { heap_.reserve(capacity); }

  void offer(double score, std::span<const std::uint32_t> members);
  std::vector<Candidate> take_sorted();

 private:
  bool beats_worst(double score, std::span<const std::uint32_t> members) const;

  std::size_t capacity_;
  SearchMode mode_;
  std::vector<Candidate> heap_;
};

/// Scores subsets of an EligibleSet with a precomputed distance table.
/// Evaluation order of distances and ranges matches metrics::diversity, so
/// scores are bit-identical to the reference path.
class SubsetScorer {
 public:
  SubsetScorer(const EligibleSet& set, metrics::VolumeRoot variant);

  double score(std::span<const std::uint32_t> members, std::vector<double>& distance_scratch,
               std::vector<double>& range_scratch) const;

 private:
  const EligibleSet& set_;
  metrics::VolumeRoot variant_;
  std::vector<double> distances_;  // size x size, symmetric
};

std::vector<Candidate> merge_sorted(std::vector<std::vector<Candidate>> parts, std::size_t top_k, SearchMode mode);

SearchResult make_result(const EligibleSet& set, std::size_t size, SearchMode mode, std::uint64_t evaluated,
                         const std::vector<Candidate>& best);

}  // namespace aps::select::detail
