#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace aps {

enum class ErrorCode {
  // matrix model
  InvalidLabel,
  DuplicateLabel,
  ShapeMismatch,
  DuplicateCell,
  ScoreOutOfRange,
  EmptyRow,
  ZeroColumn,
  UnknownDataset,
  UnknownAlgorithm,
  // CSV readers
  MalformedHeader,
  MalformedRow,
  RaggedRow,
  BadNumber,
  // metrics
  NoData,
  IncompletePoint,
  DimensionMismatch,
  TooFewPoints,
  // reduce
  TooFewRows,
  NotSymmetric,
  NoConvergence,
  BadComponentCount,
  LengthMismatch,
  ConstantInput,
  // select
  IncompleteDataset,
  InvalidSelection,
  SizeTooLarge,
  NoCompleteRows,
  // viz
  NoPlottablePoints,
  SameAlgorithm,
  InvalidPlotSpec,
  // generic
  InvalidArgument,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (and tests) can dispatch without matching message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Error tied to a position in a text input. Line numbers are 1-based and
/// count the header line.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t line, const std::string& message);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace aps
