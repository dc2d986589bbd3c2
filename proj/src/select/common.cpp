#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include "search_internal.hpp"

namespace aps::select {

std::string_view to_string(SearchMode mode) noexcept { return mode == SearchMode::Max ? "max" : "min"; }

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  // result * (n - i) / (i + 1) stays integral at every step; __int128 keeps
  // the intermediate product exact.
  __extension__ unsigned __int128 result = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    result = result * (n - i) / (i + 1);
    if (result > std::numeric_limits<std::uint64_t>::max()) {
      throw Error(ErrorCode::SizeTooLarge, "C(" + std::to_string(n) + "," + std::to_string(k) + ") exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(result);
}

std::vector<std::uint32_t> unrank_combination(std::uint64_t rank, std::size_t n, std::size_t k) {
  std::vector<std::uint32_t> out;
  out.reserve(k);
  std::size_t next = 0;
  for (std::size_t pos = 0; pos < k; ++pos) {
    for (;; ++next) {
      // Combinations that start with `next` at this position.
      const std::uint64_t block = binomial(n - next - 1, k - pos - 1);
      if (rank < block) break;
      rank -= block;
    }
    out.push_back(static_cast<std::uint32_t>(next++));
  }
  return out;
}

bool next_combination(std::span<std::uint32_t> members, std::size_t n) {
  const std::size_t k = members.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (members[i] < n - k + i) {
      ++members[i];
      for (std::size_t j = i + 1; j < k; ++j) members[j] = members[j - 1] + 1;
      return true;
    }
  }
  return false;
}

metrics::DiversityBreakdown score_selection(const PerformanceMatrix& matrix, std::span<const std::string> datasets,
                                            metrics::VolumeRoot variant) {
  std::vector<std::string> names(datasets.begin(), datasets.end());
  std::sort(names.begin(), names.end());
  if (std::adjacent_find(names.begin(), names.end()) != names.end()) {
    throw Error(ErrorCode::InvalidSelection, "selection names a dataset more than once");
  }
  std::vector<metrics::Point> points;
  for (const auto& name : names) {
    auto index = matrix.find_dataset(name);
    if (!index) throw Error(ErrorCode::UnknownDataset, "no dataset named '" + name + "'");
    if (!matrix.row_complete(*index)) {
      throw Error(ErrorCode::IncompleteDataset, "dataset '" + name + "' lacks scores for some algorithms");
    }
    auto row = matrix.row(*index);
    points.emplace_back(row.begin(), row.end());
  }
  return metrics::diversity(points, matrix.algorithm_count(), variant);
}

namespace detail {

EligibleSet eligible_rows(const PerformanceMatrix& matrix) {
  std::vector<std::size_t> rows;
  for (std::size_t d = 0; d < matrix.dataset_count(); ++d)
    if (matrix.row_complete(d)) rows.push_back(d);
  if (rows.empty()) throw Error(ErrorCode::NoCompleteRows, "no dataset has scores for every algorithm");
  std::sort(rows.begin(), rows.end(),
            [&](std::size_t a, std::size_t b) { return matrix.datasets()[a] < matrix.datasets()[b]; });

  EligibleSet set;
  set.dimensions = matrix.algorithm_count();
  for (std::size_t d : rows) {
    set.ids.push_back(matrix.datasets()[d]);
    for (const Score& s : matrix.row(d)) set.coords.push_back(*s);
  }
  return set;
}

std::uint64_t check_search(const EligibleSet& set, std::size_t size, std::size_t top_k) {
  if (size < 2) throw Error(ErrorCode::InvalidArgument, "selection size must be at least 2");
  if (top_k < 1) throw Error(ErrorCode::InvalidArgument, "top_k must be at least 1");
  if (set.dimensions < 2) throw Error(ErrorCode::InvalidArgument, "search needs at least two algorithms");
  if (size > set.size()) {
    throw Error(ErrorCode::SizeTooLarge, "selection size " + std::to_string(size) + " exceeds the " +
                                             std::to_string(set.size()) + " complete datasets");
  }
  return binomial(set.size(), size);
}

bool TopK::beats_worst(double score, std::span<const std::uint32_t> members) const {
  const Candidate& worst = heap_.front();
  if (score != worst.score) return mode_ == SearchMode::Max ? score > worst.score : score < worst.score;
  return std::lexicographical_compare(members.begin(), members.end(), worst.members.begin(), worst.members.end());
}

void TopK::offer(double score, std::span<const std::uint32_t> members) {
  auto cmp = [this](const Candidate& a, const Candidate& b) { return better(a, b, mode_); };
  if (heap_.size() < capacity_) {
    heap_.push_back(Candidate{score, {members.begin(), members.end()}});
    std::push_heap(heap_.begin(), heap_.end(), cmp);
    return;
  }
  if (!beats_worst(score, members)) return;
  std::pop_heap(heap_.begin(), heap_.end(), cmp);
  heap_.back().score = score;
  heap_.back().members.assign(members.begin(), members.end());
  std::push_heap(heap_.begin(), heap_.end(), cmp);
}

std::vector<Candidate> TopK::take_sorted() {
  std::vector<Candidate> out = std::move(heap_);
  heap_.clear();
  std::sort(out.begin(), out.end(), [this](const Candidate& a, const Candidate& b) { return better(a, b, mode_); });
  return out;
}

SubsetScorer::SubsetScorer(const EligibleSet& set, metrics::VolumeRoot variant)
    : set_(set), variant_(variant), distances_(set.size() * set.size(), 0.0) {
  const std::size_t e = set.size();
  for (std::size_t i = 0; i < e; ++i) {
    for (std::size_t j = i + 1; j < e; ++j) {
      const double d = metrics::euclidean(set.point(i), set.point(j));
      distances_[i * e + j] = d;
      distances_[j * e + i] = d;
    }
  }
}

double SubsetScorer::score(std::span<const std::uint32_t> members, std::vector<double>& distance_scratch,
                           std::vector<double>& range_scratch) const {
  const std::size_t e = set_.size();
  const std::size_t n = set_.dimensions;
  distance_scratch.clear();
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b) distance_scratch.push_back(distances_[members[a] * e + members[b]]);

  range_scratch.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    double lo = set_.point(members[0])[k];
    double hi = lo;
    for (std::uint32_t m : members) {
      const double x = set_.point(m)[k];
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
    range_scratch[k] = hi - lo;
  }
  return metrics::diversity_score(distance_scratch, range_scratch, variant_);
}

std::vector<Candidate> merge_sorted(std::vector<std::vector<Candidate>> parts, std::size_t top_k, SearchMode mode) {
  std::vector<Candidate> all;
  for (auto& part : parts)
    for (auto& c : part) all.push_back(std::move(c));
  std::sort(all.begin(), all.end(), [mode](const Candidate& a, const Candidate& b) { return better(a, b, mode); });
  if (all.size() > top_k) all.resize(top_k);
  return all;
}

SearchResult make_result(const EligibleSet& set, std::size_t size, SearchMode mode, std::uint64_t evaluated,
                         const std::vector<Candidate>& best) {
  SearchResult result;
  result.mode = mode;
  result.size = size;
  result.candidates_evaluated = evaluated;
  for (std::size_t i = 0; i < best.size(); ++i) {
    Selection s;
    for (std::uint32_t m : best[i].members) s.datasets.push_back(set.ids[m]);
    s.score = best[i].score;
    s.rank = i + 1;
    result.top.push_back(std::move(s));
  }
  return result;
}

}  // namespace detail
}  // namespace aps::select
