#include "aps/error.hpp"

namespace aps {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidLabel: return "InvalidLabel";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::DuplicateCell: return "DuplicateCell";
    case ErrorCode::ScoreOutOfRange: return "ScoreOutOfRange";
    case ErrorCode::EmptyRow: return "EmptyRow";
    case ErrorCode::ZeroColumn: return "ZeroColumn";
    case ErrorCode::UnknownDataset: return "UnknownDataset";
    case ErrorCode::UnknownAlgorithm: return "UnknownAlgorithm";
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::MalformedRow: return "MalformedRow";
    case ErrorCode::RaggedRow: return "RaggedRow";
    case ErrorCode::BadNumber: return "BadNumber";
    case ErrorCode::NoData: return "NoData";
    case ErrorCode::IncompletePoint: return "IncompletePoint";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::TooFewRows: return "TooFewRows";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::BadComponentCount: return "BadComponentCount";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ConstantInput: return "ConstantInput";
    case ErrorCode::IncompleteDataset: return "IncompleteDataset";
    case ErrorCode::InvalidSelection: return "InvalidSelection";
    case ErrorCode::SizeTooLarge: return "SizeTooLarge";
    case ErrorCode::NoCompleteRows: return "NoCompleteRows";
    case ErrorCode::NoPlottablePoints: return "NoPlottablePoints";
    case ErrorCode::SameAlgorithm: return "SameAlgorithm";
    case ErrorCode::InvalidPlotSpec: return "InvalidPlotSpec";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

ParseError::ParseError(ErrorCode code, std::size_t line, const std::string& message)
    : Error(code, "line " + std::to_string(line) + ": " + message), line_(line) {}

}  // namespace aps
