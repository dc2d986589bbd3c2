#include <gtest/gtest.h>

#include "aps/select.hpp"
#include "fixtures.hpp"
#include "properties.hpp"

namespace aps::select {
namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no aps::Error thrown";
  return ErrorCode::InvalidArgument;
}

std::vector<std::string> names(const Selection& s) {
  std::vector<std::string> out;
  for (const auto& d : s.datasets) out.push_back(d.str());
  return out;
}

using Names = std::vector<std::string>;

TEST(Combinatorics, Binomial) {
  EXPECT_EQ(binomial(39, 2), 741u);
  EXPECT_EQ(binomial(39, 3), 9139u);
  EXPECT_EQ(binomial(39, 4), 82251u);
  EXPECT_EQ(binomial(5, 0), 1u);
  EXPECT_EQ(binomial(3, 5), 0u);
  EXPECT_EQ(binomial(66, 33), 7219428434016265740ull);
  EXPECT_EQ(code_of([] { binomial(100, 50); }), ErrorCode::SizeTooLarge);
}

TEST(Combinatorics, UnrankMatchesIteration) {
  std::vector<std::uint32_t> c{0, 1, 2};
  std::uint64_t rank = 0;
  do {
    EXPECT_EQ(unrank_combination(rank, 7, 3), c) << rank;
    ++rank;
  } while (next_combination(c, 7));
  EXPECT_EQ(rank, binomial(7, 3));
}

TEST(ScoreSelection, PublishedSet8AndErrors) {
  const auto& m = testing::fixture_matrix();
  const Names set8{"Jester", "Amazon_Arts_Crafts_and_Sewing", "Amazon_Digital_Music", "Amazon_Gift_Cards"};
  EXPECT_NEAR(score_selection(m, set8).score, 0.3825, 1e-3);
  const Names incomplete{"Jester", "Epinions"};
  EXPECT_EQ(code_of([&] { score_selection(m, incomplete); }), ErrorCode::IncompleteDataset);
  const Names twice{"Jester", "Jester"};
  EXPECT_EQ(code_of([&] { score_selection(m, twice); }), ErrorCode::InvalidSelection);
  const Names unknown{"Jester", "Nope"};
  EXPECT_EQ(code_of([&] { score_selection(m, unknown); }), ErrorCode::UnknownDataset);
}

TEST(ScoreSelection, OrderDoesNotMatter) {
  const auto& m = testing::fixture_matrix();
  const Names a{"Food", "Jester", "LastFM"};
  const Names b{"LastFM", "Jester", "Food"};
  EXPECT_EQ(score_selection(m, a).score, score_selection(m, b).score);
}

TEST(Exhaustive, PublishedMaxSets) {
  const auto& m = testing::fixture_matrix();
  const auto s2 = exhaustive_search(m, 2, SearchMode::Max);
  EXPECT_EQ(s2.candidates_evaluated, 741u);
  EXPECT_EQ(names(s2.top.front()), (Names{"Food", "Jester"}));
  EXPECT_NEAR(s2.top.front().score, 0.4698, 1e-3);

  const auto s3 = exhaustive_search(m, 3, SearchMode::Max);
  EXPECT_EQ(names(s3.top.front()), (Names{"Food", "Jester", "MovieLensLatestSmall"}));
  EXPECT_NEAR(s3.top.front().score, 0.4468, 1e-3);

  const auto s4 = exhaustive_search(m, 4, SearchMode::Max);
  EXPECT_EQ(s4.candidates_evaluated, 82251u);
  EXPECT_EQ(names(s4.top.front()), (Names{"Amazon_Magazine_Subscriptions", "FilmTrust", "Food", "Jester"}));
  EXPECT_NEAR(s4.top.front().score, 0.4459, 1e-3);
}

TEST(Exhaustive, PublishedMinSetsUpToThree) {
  const auto& m = testing::fixture_matrix();
  const auto s2 = exhaustive_search(m, 2, SearchMode::Min);
  EXPECT_EQ(names(s2.top.front()), (Names{"FourSquareNYC", "MarketBiasModcloth"}));
  EXPECT_LE(s2.top.front().score, 5e-4);
  const auto s3 = exhaustive_search(m, 3, SearchMode::Min);
  EXPECT_EQ(names(s3.top.front()), (Names{"Amazon_Musical_Instruments", "Amazon_Prime_Pantry", "RentTheRunway"}));
  EXPECT_NEAR(s3.top.front().score, 0.0059, 1e-3);
}

TEST(Exhaustive, TopKIsOrderedAndRanked) {
  const auto r = exhaustive_search(testing::fixture_matrix(), 3, SearchMode::Max, {5});
  ASSERT_EQ(r.top.size(), 5u);
  for (std::size_t i = 0; i < r.top.size(); ++i) {
    EXPECT_EQ(r.top[i].rank, i + 1);
    if (i) EXPECT_GE(r.top[i - 1].score, r.top[i].score);
  }
  EXPECT_EQ(names(r.top[1]), (Names{"Food", "Jester", "LastFM"}));
}

TEST(Exhaustive, MatchesSerialReferenceForAnyWorkerCount) {
  const auto& m = testing::fixture_matrix();
  for (auto mode : {SearchMode::Max, SearchMode::Min}) {
    for (std::size_t size : {2u, 3u}) {
      const auto ref = exhaustive_search_reference(m, size, mode, {20});
      for (int workers : {1, 2, 3, 4, 7}) {
        const auto got = exhaustive_search(m, size, mode, {20, metrics::VolumeRoot::NthRoot, workers});
        ASSERT_EQ(got.top.size(), ref.top.size());
        EXPECT_EQ(got.candidates_evaluated, ref.candidates_evaluated);
        for (std::size_t i = 0; i < ref.top.size(); ++i) {
          EXPECT_EQ(got.top[i].datasets, ref.top[i].datasets) << "workers " << workers << " rank " << i + 1;
          EXPECT_EQ(got.top[i].score, ref.top[i].score);
        }
      }
    }
  }
}

TEST(Exhaustive, TiesBreakOnSortedNames) {
  // Four identical points: every pair scores 0, so the lexicographically first pair wins.
  const auto m = ingest::parse_wide("dataset,A,B\nd,0.5,0.5\nb,0.5,0.5\nc,0.5,0.5\na,0.5,0.5\n");
  const auto r = exhaustive_search(m, 2, SearchMode::Max, {3});
  EXPECT_EQ(r.top[0].score, 0.0);
  EXPECT_EQ(names(r.top[0]), (Names{"a", "b"}));
  EXPECT_EQ(names(r.top[1]), (Names{"a", "c"}));
  EXPECT_EQ(names(r.top[2]), (Names{"a", "d"}));
  EXPECT_EQ(names(greedy_search(m, 3, SearchMode::Max).top[0]), (Names{"a", "b", "c"}));
}

TEST(Exhaustive, SingleCandidate) {
  const auto m = ingest::parse_wide("dataset,A,B\na,0.1,0.2\nb,0.5,0.3\nc,0.9,0.7\n");
  EXPECT_EQ(exhaustive_search(m, 3, SearchMode::Max).candidates_evaluated, 1u);
}

TEST(Exhaustive, Errors) {
  const auto& m = testing::fixture_matrix();
  EXPECT_EQ(code_of([&] { exhaustive_search(m, 1, SearchMode::Max); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([&] { exhaustive_search(m, 40, SearchMode::Max); }), ErrorCode::SizeTooLarge);
  EXPECT_EQ(code_of([&] { exhaustive_search(m, 2, SearchMode::Max, {0}); }), ErrorCode::InvalidArgument);
  const auto gappy = ingest::parse_wide("dataset,A,B\na,0.1,\nb,,0.3\n");
  EXPECT_EQ(code_of([&] { exhaustive_search(gappy, 2, SearchMode::Max); }), ErrorCode::NoCompleteRows);
  const auto one_axis = ingest::parse_wide("dataset,A\na,0.1\nb,0.3\n");
  EXPECT_EQ(code_of([&] { exhaustive_search(one_axis, 2, SearchMode::Max); }), ErrorCode::InvalidArgument);
}

TEST(Greedy, SizeTwoEqualsExhaustive) {
  const auto& m = testing::fixture_matrix();
  for (auto mode : {SearchMode::Max, SearchMode::Min}) {
    const auto g = greedy_search(m, 2, mode);
    const auto e = exhaustive_search(m, 2, mode);
    EXPECT_EQ(g.top.front().datasets, e.top.front().datasets);
    EXPECT_EQ(g.top.front().score, e.top.front().score);
  }
}

TEST(Greedy, FixtureSizeFourWithinFifteenPercent) {
  const auto& m = testing::fixture_matrix();
  const double g = greedy_search(m, 4, SearchMode::Max).top.front().score;
  const double e = exhaustive_search(m, 4, SearchMode::Max).top.front().score;
  EXPECT_LE(g, e);
  EXPECT_GE(g, 0.85 * e);
}

TEST(Eligibility, AlgorithmSubsetWidensCandidates) {
  const auto& m = testing::fixture_matrix();
  const std::vector<std::string> pair{"BPR", "ItemKNN"};
  const auto narrowed = restrict_algorithms(m, pair);
  EXPECT_GT(exhaustive_search(narrowed, 2, SearchMode::Max).candidates_evaluated, 741u);
}

}  // namespace
}  // namespace aps::select
