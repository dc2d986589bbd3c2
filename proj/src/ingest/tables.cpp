#include <charconv>
#include <optional>
#include <string>
#include <system_error>

#include "aps/csv.hpp"
#include "aps/format.hpp"
#include "aps/ingest.hpp"

namespace aps::ingest {

namespace {

// Plain decimal literal: optional sign, digits, optional fraction, optional
// exponent. No thousands separators, no hex, no inf/nan spellings.
bool is_decimal_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t digits = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++digits;
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++digits;
  }
  if (digits == 0) return false;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t exp_digits = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++exp_digits;
    if (exp_digits == 0) return false;
  }
  return i == s.size();
}

Score parse_score(std::string_view text, std::size_t line) {
  if (text.empty() || text == "NaN") return std::nullopt;
  if (!is_decimal_literal(text)) {
    throw ParseError(ErrorCode::BadNumber, line, "'" + std::string(text) + "' is not a decimal score");
  }
  if (text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError(ErrorCode::BadNumber, line, "'" + std::string(text) + "' is not a decimal score");
  }
  return value;
}

template <class Id>
Id make_label(const std::string& text, std::size_t line) {
  try {
    return Id(text);
  } catch (const Error& e) {
    throw ParseError(e.code(), line, e.what());
  }
}

bool header_is_long(const std::vector<std::string>& fields) {
  return fields.size() >= 3 && fields[0] == "dataset" && fields[1] == "algorithm" && fields[2] == "score";
}

}  // namespace

PerformanceMatrix parse_long(std::string_view text, ScoreMeta meta) {
  auto records = csv::read_records(text);
  if (records.empty() || records[0].fields.size() != 3 || !header_is_long(records[0].fields)) {
    throw ParseError(ErrorCode::MalformedHeader, records.empty() ? 1 : records[0].line,
                     "expected header 'dataset,algorithm,score'");
  }
  std::vector<ScoreRecord> scores;
  scores.reserve(records.size() - 1);
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& r = records[i];
    if (r.fields.size() != 3) {
      throw ParseError(ErrorCode::MalformedRow, r.line,
                       "expected 3 fields, found " + std::to_string(r.fields.size()));
    }
    scores.push_back(ScoreRecord{make_label<DatasetId>(r.fields[0], r.line),
                                 make_label<AlgorithmId>(r.fields[1], r.line),
                                 parse_score(r.fields[2], r.line), r.line});
  }
  return build_matrix(scores, std::move(meta));
}

PerformanceMatrix parse_wide(std::string_view text, ScoreMeta meta) {
  auto records = csv::read_records(text);
  if (records.empty() || records[0].fields.empty() || records[0].fields[0] != "dataset") {
    throw ParseError(ErrorCode::MalformedHeader, records.empty() ? 1 : records[0].line,
                     "expected header starting with 'dataset'");
  }
  const auto& header = records[0];
  std::vector<AlgorithmId> algorithms;
  for (std::size_t c = 1; c < header.fields.size(); ++c) {
    algorithms.push_back(make_label<AlgorithmId>(header.fields[c], header.line));
  }
  if (algorithms.empty()) {
    throw ParseError(ErrorCode::MalformedHeader, header.line, "no algorithm columns");
  }
  for (std::size_t a = 0; a < algorithms.size(); ++a)
    for (std::size_t b = a + 1; b < algorithms.size(); ++b)
      if (algorithms[a] == algorithms[b])
        throw ParseError(ErrorCode::MalformedHeader, header.line,
                         "algorithm '" + algorithms[a].str() + "' listed twice");

  std::vector<ScoreRecord> scores;
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& r = records[i];
    if (r.fields.size() != header.fields.size()) {
      throw ParseError(ErrorCode::RaggedRow, r.line,
                       "expected " + std::to_string(header.fields.size()) + " fields, found " +
                           std::to_string(r.fields.size()));
    }
    auto dataset = make_label<DatasetId>(r.fields[0], r.line);
    for (std::size_t c = 0; c < algorithms.size(); ++c) {
      scores.push_back(ScoreRecord{dataset, algorithms[c], parse_score(r.fields[c + 1], r.line), r.line});
    }
  }
  if (scores.empty()) {
    return PerformanceMatrix({}, std::move(algorithms), {}, std::move(meta));
  }
  return build_matrix(scores, std::move(meta));
}

PerformanceMatrix parse_table(std::string_view text, TableFormat format, ScoreMeta meta) {
  if (format == TableFormat::Auto) {
    auto records = csv::read_records(text.substr(0, text.find('\n')));
    format = (!records.empty() && header_is_long(records[0].fields)) ? TableFormat::Long : TableFormat::Wide;
  }
  return format == TableFormat::Long ? parse_long(text, std::move(meta)) : parse_wide(text, std::move(meta));
}

std::string write_wide(const PerformanceMatrix& matrix) {
  std::string out;
  std::vector<std::string> fields{"dataset"};
  for (const auto& a : matrix.algorithms()) fields.push_back(a.str());
  out += csv::join_fields(fields) + "\n";
  for (std::size_t d = 0; d < matrix.dataset_count(); ++d) {
    fields.assign(1, matrix.datasets()[d].str());
    for (const Score& s : matrix.row(d)) fields.push_back(s ? format_shortest(*s) : std::string());
    out += csv::join_fields(fields) + "\n";
  }
  return out;
}

std::string write_long(const PerformanceMatrix& matrix) {
  std::string out = "dataset,algorithm,score\n";
  for (std::size_t d = 0; d < matrix.dataset_count(); ++d) {
    for (std::size_t a = 0; a < matrix.algorithm_count(); ++a) {
      const Score& s = matrix.at(d, a);
      out += csv::join_fields({matrix.datasets()[d].str(), matrix.algorithms()[a].str(),
                               s ? format_shortest(*s) : std::string()});
      out += "\n";
    }
  }
  return out;
}

ValidationReport validate(const PerformanceMatrix& matrix) {
  ValidationReport report;
  report.dataset_count = matrix.dataset_count();
  report.algorithm_count = matrix.algorithm_count();
  for (std::size_t d = 0; d < matrix.dataset_count(); ++d) {
    const std::size_t present = matrix.present_count(d);
    report.present_cells += present;
    report.missing_cells += matrix.algorithm_count() - present;
    const std::string& name = matrix.datasets()[d].str();
    if (present == 1) report.warnings.push_back(name + ": 1 result, variance undefined");
    if (present == matrix.algorithm_count()) {
      ++report.complete_row_count;
    } else {
      report.warnings.push_back(name + ": " + std::to_string(present) + " of " +
                                std::to_string(matrix.algorithm_count()) +
                                " results, excluded from selection search by default");
    }
  }
  return report;
}

std::vector<DatasetInfo> parse_dataset_info(std::string_view text) {
  auto records = csv::read_records(text);
  const std::vector<std::string> expected{"dataset", "interactions", "users", "items"};
  if (records.empty() || records[0].fields != expected) {
    throw ParseError(ErrorCode::MalformedHeader, 1, "expected header 'dataset,interactions,users,items'");
  }
  auto count = [](const std::string& field, std::size_t line) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
      throw ParseError(ErrorCode::BadNumber, line, "'" + field + "' is not a count");
    }
    return value;
  };
  std::vector<DatasetInfo> out;
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& r = records[i];
    if (r.fields.size() != 4) throw ParseError(ErrorCode::RaggedRow, r.line, "expected 4 fields");
    out.push_back(DatasetInfo{make_label<DatasetId>(r.fields[0], r.line), count(r.fields[1], r.line),
                              count(r.fields[2], r.line), count(r.fields[3], r.line)});
  }
  return out;
}

}  // namespace aps::ingest
