#include <gtest/gtest.h>

#include "aps/format.hpp"
#include "aps/matrix.hpp"
#include "fixtures.hpp"

namespace aps {
namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no aps::Error thrown";
  return ErrorCode::InvalidArgument;
}

ScoreRecord rec(const char* d, const char* a, Score s) { return {DatasetId(d), AlgorithmId(a), s}; }

TEST(Label, RejectsEmptyAndPaddedNames) {
  EXPECT_EQ(code_of([] { DatasetId(""); }), ErrorCode::InvalidLabel);
  EXPECT_EQ(code_of([] { DatasetId(" Jester"); }), ErrorCode::InvalidLabel);
  EXPECT_EQ(code_of([] { AlgorithmId("BPR\t"); }), ErrorCode::InvalidLabel);
  EXPECT_EQ(DatasetId("Amazon Books").str(), "Amazon Books");
  EXPECT_LT(DatasetId("Food"), DatasetId("Jester"));
}

TEST(BuildMatrix, SingleRecord) {
  const std::vector<ScoreRecord> records{rec("Jester", "BPR", 0.4854)};
  const auto m = build_matrix(records);
  ASSERT_EQ(m.dataset_count(), 1u);
  ASSERT_EQ(m.algorithm_count(), 1u);
  ASSERT_TRUE(m.at(0, 0).has_value());
  EXPECT_DOUBLE_EQ(*m.at(0, 0), 0.4854);
  EXPECT_EQ(m.meta().metric_name, "nDCG");
  EXPECT_EQ(m.meta().k, 10);
}

TEST(BuildMatrix, DuplicatePairIsRejected) {
  const std::vector<ScoreRecord> records{rec("A", "X", 0.2), rec("A", "X", 0.3)};
  EXPECT_EQ(code_of([&] { build_matrix(records); }), ErrorCode::DuplicateCell);
}

TEST(BuildMatrix, AllMissingRowIsRejected) {
  const std::vector<ScoreRecord> records{rec("A", "X", std::nullopt)};
  EXPECT_EQ(code_of([&] { build_matrix(records); }), ErrorCode::EmptyRow);
}

TEST(BuildMatrix, OutOfRangeScoreIsRejected) {
  const std::vector<ScoreRecord> high{rec("A", "X", 1.5)};
  const std::vector<ScoreRecord> low{rec("A", "X", -0.1)};
  EXPECT_EQ(code_of([&] { build_matrix(high); }), ErrorCode::ScoreOutOfRange);
  EXPECT_EQ(code_of([&] { build_matrix(low); }), ErrorCode::ScoreOutOfRange);
}

TEST(BuildMatrix, ErrorsCarrySourceLine) {
  std::vector<ScoreRecord> records{rec("A", "X", 0.2), rec("A", "X", 0.3)};
  records[1].line = 7;
  try {
    build_matrix(records);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 7u);
    EXPECT_NE(std::string(e.what()).find("line 7"), std::string::npos);
  }
}

TEST(BuildMatrix, KeepsFirstSeenOrderAndMarksGapsMissing) {
  const std::vector<ScoreRecord> records{rec("B", "Y", 0.1), rec("A", "X", 0.2), rec("B", "X", 0.3)};
  const auto m = build_matrix(records);
  EXPECT_EQ(m.datasets()[0].str(), "B");
  EXPECT_EQ(m.algorithms()[0].str(), "Y");
  EXPECT_FALSE(m.at(1, 0).has_value());
  EXPECT_EQ(m.present_count(0), 2u);
  EXPECT_TRUE(m.row_complete(0));
  EXPECT_FALSE(m.row_complete(1));
}

TEST(Matrix, ConstructorValidatesShapeAndLabels) {
  EXPECT_EQ(code_of([] { PerformanceMatrix({DatasetId("a")}, {AlgorithmId("x")}, {}); }), ErrorCode::ShapeMismatch);
  EXPECT_EQ(code_of([] {
              PerformanceMatrix({DatasetId("a"), DatasetId("a")}, {AlgorithmId("x")}, {0.1, 0.2});
            }),
            ErrorCode::DuplicateLabel);
  EXPECT_EQ(code_of([] { PerformanceMatrix({DatasetId("a")}, {AlgorithmId("x")}, {0.1}, {"nDCG", 0}); }),
            ErrorCode::InvalidArgument);
}

TEST(CompleteRows, FixtureHas39) {
  EXPECT_EQ(complete_rows(testing::fixture_matrix()).dataset_count(), 39u);
}

TEST(CompleteRows, IdentityWithoutGapsAndEmptyWhenEveryRowHasOne) {
  const PerformanceMatrix full({DatasetId("a"), DatasetId("b")}, {AlgorithmId("x"), AlgorithmId("y")},
                               {0.1, 0.2, 0.3, 0.4});
  EXPECT_EQ(complete_rows(full), full);
  const PerformanceMatrix gappy({DatasetId("a"), DatasetId("b")}, {AlgorithmId("x"), AlgorithmId("y")},
                                {0.1, std::nullopt, std::nullopt, 0.4});
  EXPECT_EQ(complete_rows(gappy).dataset_count(), 0u);
}

TEST(NormalizePerAxis, DividesByColumnMax) {
  const PerformanceMatrix m({DatasetId("a"), DatasetId("b")}, {AlgorithmId("x")}, {0.25, 0.5});
  const auto n = normalize_per_axis(m);
  EXPECT_DOUBLE_EQ(*n.at(0, 0), 0.5);
  EXPECT_DOUBLE_EQ(*n.at(1, 0), 1.0);
}

TEST(NormalizePerAxis, FixtureJesterTopsBpr) {
  const auto& m = testing::fixture_matrix();
  const auto n = normalize_per_axis(m);
  EXPECT_EQ(*n.at(*m.find_dataset("Jester"), *m.find_algorithm("BPR")), 1.0);
}

TEST(NormalizePerAxis, ZeroColumn) {
  const PerformanceMatrix m({DatasetId("a"), DatasetId("b")}, {AlgorithmId("x")}, {0.0, 0.0});
  EXPECT_EQ(code_of([&] { normalize_per_axis(m); }), ErrorCode::ZeroColumn);
}

TEST(RowVector, Epinions) {
  const auto row = row_vector(testing::fixture_matrix(), "Epinions");
  ASSERT_EQ(row.size(), 5u);
  EXPECT_DOUBLE_EQ(*row[0], 0.0722);
  EXPECT_DOUBLE_EQ(*row[1], 0.3757);
  EXPECT_FALSE(row[2] || row[3] || row[4]);
  EXPECT_EQ(code_of([] { row_vector(testing::fixture_matrix(), "Nope"); }), ErrorCode::UnknownDataset);
}

TEST(RowVector, SingleAlgorithm) {
  const PerformanceMatrix m({DatasetId("a")}, {AlgorithmId("x")}, {0.3});
  EXPECT_EQ(row_vector(m, "a").size(), 1u);
}

TEST(RestrictAlgorithms, WidensEligibilityAndDropsEmptyRows) {
  const auto& m = testing::fixture_matrix();
  const std::vector<std::string> pair{"ItemKNN", "BPR"};
  const auto r = restrict_algorithms(m, pair);
  EXPECT_EQ(r.algorithms()[0].str(), "ItemKNN");
  EXPECT_GT(complete_rows(r).dataset_count(), complete_rows(m).dataset_count());
  for (std::size_t d = 0; d < r.dataset_count(); ++d) EXPECT_GE(r.present_count(d), 1u);
  const std::vector<std::string> bad{"Nope"};
  EXPECT_EQ(code_of([&] { restrict_algorithms(m, bad); }), ErrorCode::UnknownAlgorithm);
}

TEST(Format, FixedRoundsHalfToEvenOnExactTies) {
  EXPECT_EQ(format_fixed(0.125, 2), "0.12");
  EXPECT_EQ(format_fixed(0.375, 2), "0.38");
  EXPECT_EQ(format_fixed(0.51625, 4), "0.5162");  // binary value sits just below the tie
  EXPECT_EQ(format_fixed(-0.00001, 4), "0.0000");
  EXPECT_EQ(format_fixed(-0.25, 1), "-0.2");
}

TEST(Format, Shortest) {
  EXPECT_EQ(format_shortest(0.4854), "0.4854");
  EXPECT_EQ(format_shortest(1.0), "1");
}

TEST(Format, TwoSignificantFigures) {
  EXPECT_EQ(format_two_sig(85.2), "85");
  EXPECT_EQ(format_two_sig(8.25), "8.2");
  EXPECT_EQ(format_two_sig(0.5123), "0.51");
  EXPECT_EQ(format_two_sig(9.96), "10");
  EXPECT_EQ(format_two_sig(99.7), "100");
  EXPECT_EQ(format_two_sig(0.0), "0");
}

TEST(ErrorText, CarriesCodeName) {
  const Error e(ErrorCode::ZeroColumn, "boom");
  EXPECT_EQ(std::string(e.what()), "ZeroColumn: boom");
  EXPECT_EQ(to_string(ErrorCode::IoError), "IoError");
}

}  // namespace
}  // namespace aps
