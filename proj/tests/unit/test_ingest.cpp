#include <gtest/gtest.h>

#include <algorithm>

#include "aps/csv.hpp"
#include "aps/ingest.hpp"
#include "fixtures.hpp"

namespace aps::ingest {
namespace {

template <class F>
std::pair<ErrorCode, std::size_t> parse_failure(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return {e.code(), e.line()};
  }
  ADD_FAILURE() << "no ParseError thrown";
  return {ErrorCode::InvalidArgument, 0};
}

TEST(Csv, QuotedFieldsEscapesAndLineEndings) {
  const auto records = csv::read_records("\xEF\xBB\xBF" "a,\"b,c\"\r\n\r\n\"say \"\"hi\"\"\",\"x\ny\"\n");
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0].fields, (std::vector<std::string>{"a", "b,c"}));
  EXPECT_EQ(records[1].line, 3u);
  EXPECT_EQ(records[1].fields, (std::vector<std::string>{"say \"hi\"", "x\ny"}));
}

TEST(Csv, UnterminatedQuote) {
  EXPECT_EQ(parse_failure([] { csv::read_records("a\n\"open,b\n"); }).first, ErrorCode::MalformedRow);
}

TEST(Csv, EscapeAndJoinRoundTrip) {
  const std::vector<std::string> fields{"plain", "with,comma", "with \"quote\"", ""};
  const auto line = csv::join_fields(fields);
  EXPECT_EQ(line, "plain,\"with,comma\",\"with \"\"quote\"\"\",");
  EXPECT_EQ(csv::read_records(line).front().fields, fields);
}

TEST(ParseLong, SingleCell) {
  const auto m = parse_long("dataset,algorithm,score\nJester,MultiVAE,0.5023");
  ASSERT_EQ(m.dataset_count(), 1u);
  EXPECT_DOUBLE_EQ(*m.at(0, 0), 0.5023);
}

TEST(ParseLong, NaNMarksMissing) {
  const auto m = parse_long("dataset,algorithm,score\nEpinions,MultiVAE,NaN\nEpinions,BPR,0.0722\n");
  ASSERT_EQ(m.algorithm_count(), 2u);
  EXPECT_FALSE(m.at(0, 0).has_value());
  EXPECT_DOUBLE_EQ(*m.at(0, 1), 0.0722);
}

TEST(ParseLong, HeaderAndRowErrors) {
  EXPECT_EQ(parse_failure([] { parse_long("a,b\n1,2"); }).first, ErrorCode::MalformedHeader);
  const auto bad_number = parse_failure([] { parse_long("dataset,algorithm,score\nA,X,0.1\nA,Y,abc\n"); });
  EXPECT_EQ(bad_number.first, ErrorCode::BadNumber);
  EXPECT_EQ(bad_number.second, 3u);
  EXPECT_EQ(parse_failure([] { parse_long("dataset,algorithm,score\nA,X\n"); }).first, ErrorCode::MalformedRow);
  EXPECT_EQ(parse_failure([] { parse_long("dataset,algorithm,score\nA,X,0.1\nA,X,0.2\n"); }),
            std::make_pair(ErrorCode::DuplicateCell, std::size_t{3}));
  EXPECT_EQ(parse_failure([] { parse_long("dataset,algorithm,score\nA,X,1.2\n"); }).first,
            ErrorCode::ScoreOutOfRange);
}

TEST(ParseWide, Basic) {
  const auto m = parse_wide("dataset,BPR,ItemKNN\nFood,0.0205,0.0105");
  ASSERT_EQ(m.dataset_count(), 1u);
  ASSERT_EQ(m.algorithm_count(), 2u);
  EXPECT_DOUBLE_EQ(*m.at(0, 1), 0.0105);
}

TEST(ParseWide, RaggedAndDuplicateColumns) {
  const auto ragged = parse_failure([] { parse_wide("dataset,A,B,C\nx,0.1,0.2\n"); });
  EXPECT_EQ(ragged, std::make_pair(ErrorCode::RaggedRow, std::size_t{2}));
  EXPECT_EQ(parse_failure([] { parse_wide("dataset,A,A\nx,0.1,0.2\n"); }).first, ErrorCode::MalformedHeader);
  EXPECT_EQ(parse_failure([] { parse_wide("name,A\nx,0.1\n"); }).first, ErrorCode::MalformedHeader);
  EXPECT_EQ(parse_failure([] { parse_wide("dataset,A\nx,\n"); }).first, ErrorCode::EmptyRow);
}

TEST(ParseTable, AutoDetection) {
  const auto wide = parse_table("dataset,BPR\nFood,0.0205\n", TableFormat::Auto);
  const auto lng = parse_table("dataset,algorithm,score\nFood,BPR,0.0205\n", TableFormat::Auto);
  EXPECT_EQ(wide, lng);
}

TEST(WriteWide, FixtureHas72Lines) {
  const auto text = write_wide(testing::fixture_matrix());
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 72);
}

TEST(WriteWide, EmptyMatrixIsHeaderOnly) {
  const auto m = parse_wide("dataset,A,B\n");
  EXPECT_EQ(m.dataset_count(), 0u);
  EXPECT_EQ(write_wide(m), "dataset,A,B\n");
}

TEST(RoundTrip, FixtureWideToLongAndBack) {
  const auto& m = testing::fixture_matrix();
  EXPECT_EQ(parse_long(write_long(m)), m);
  EXPECT_EQ(parse_wide(write_wide(m)), m);
}

TEST(Validate, FixtureCounts) {
  const auto report = validate(testing::fixture_matrix());
  EXPECT_EQ(report.dataset_count, 71u);
  EXPECT_EQ(report.algorithm_count, 5u);
  EXPECT_EQ(report.present_cells, 268u);
  EXPECT_EQ(report.missing_cells, 71u * 5u - 268u);
  EXPECT_EQ(report.complete_row_count, 39u);
  const auto single = std::count_if(report.warnings.begin(), report.warnings.end(),
                                    [](const std::string& w) { return w.find("variance undefined") != w.npos; });
  EXPECT_GT(single, 0);
}

TEST(Validate, CompleteMatrixHasNoWarnings) {
  const auto report = validate(parse_wide("dataset,A,B\nx,0.1,0.2\ny,0.3,0.4\n"));
  EXPECT_EQ(report.missing_cells, 0u);
  EXPECT_TRUE(report.warnings.empty());
}

TEST(DatasetInfo, Fixture) {
  const auto info = parse_dataset_info(testing::read_text(testing::fixture_path("dataset_stats.csv")));
  EXPECT_EQ(info.size(), 75u);
  for (const auto& row : info) EXPECT_GT(row.interactions, 0u) << row.dataset.str();
}

TEST(DatasetInfo, Errors) {
  EXPECT_EQ(parse_failure([] { parse_dataset_info("dataset,n\n"); }).first, ErrorCode::MalformedHeader);
  EXPECT_EQ(parse_failure([] { parse_dataset_info("dataset,interactions,users,items\nx,1,-2,3\n"); }).first,
            ErrorCode::BadNumber);
}

}  // namespace
}  // namespace aps::ingest
