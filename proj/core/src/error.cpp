#include "compgap/error.h"

namespace compgap {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidId: return "InvalidId";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::MissingParent: return "MissingParent";
    case ErrorCode::DepthViolation: return "DepthViolation";
    case ErrorCode::OrphanInternal: return "OrphanInternal";
    case ErrorCode::UnknownId: return "UnknownId";
    case ErrorCode::UnknownTerm: return "UnknownTerm";
    case ErrorCode::AllocationSumMismatch: return "AllocationSumMismatch";
    case ErrorCode::AllocationOutOfRange: return "AllocationOutOfRange";
    case ErrorCode::IncompleteRcd: return "IncompleteRcd";
    case ErrorCode::ScoreOutOfRange: return "ScoreOutOfRange";
    case ErrorCode::WeightSumViolation: return "WeightSumViolation";
    case ErrorCode::MixedKeys: return "MixedKeys";
    case ErrorCode::EmptyResponseSet: return "EmptyResponseSet";
    case ErrorCode::MissingTypeValue: return "MissingTypeValue";
    case ErrorCode::WeightCoverageGap: return "WeightCoverageGap";
    case ErrorCode::LevelMismatch: return "LevelMismatch";
    case ErrorCode::IncompleteMatrix: return "IncompleteMatrix";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::ColumnMismatch: return "ColumnMismatch";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::NonpositiveN: return "NonpositiveN";
    case ErrorCode::SignViolation: return "SignViolation";
    case ErrorCode::DivisionByZeroWeight: return "DivisionByZeroWeight";
    case ErrorCode::UnknownCompetenceInRule: return "UnknownCompetenceInRule";
    case ErrorCode::DegenerateVariance: return "DegenerateVariance";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::InvalidAlpha: return "InvalidAlpha";
    case ErrorCode::TooFewMeans: return "TooFewMeans";
    case ErrorCode::UnsortedInput: return "UnsortedInput";
    case ErrorCode::NonpositiveVariance: return "NonpositiveVariance";
    case ErrorCode::CandidateMismatch: return "CandidateMismatch";
    case ErrorCode::EmptyPointSet: return "EmptyPointSet";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

ErrorCategory error_category(ErrorCode code) {
  switch (code) {
    case ErrorCode::IoError:
      return ErrorCategory::Io;
    case ErrorCode::DegenerateVariance:
    case ErrorCode::NonpositiveVariance:
    case ErrorCode::TooFewMeans:
    case ErrorCode::UnsortedInput:
    case ErrorCode::KindMismatch:
    case ErrorCode::NonpositiveN:
    case ErrorCode::SignViolation:
    case ErrorCode::DivisionByZeroWeight:
    case ErrorCode::CandidateMismatch:
    case ErrorCode::EmptyPointSet:
    case ErrorCode::InvalidAlpha:
    case ErrorCode::OutOfRange:
      return ErrorCategory::Computation;
    default:
      return ErrorCategory::Validation;
  }
}

namespace {
std::string compose(ErrorCode code, const std::string& message, const std::string& location) {
  std::string out;
  if (!location.empty()) {
    out += location;
    out += ": ";
  }
  out += error_code_name(code);
  out += ": ";
  out += message;
  return out;
}
}  // namespace

Error::Error(ErrorCode code, const std::string& message, std::string location)
    : std::runtime_error(compose(code, message, location)),
      code_(code),
      detail_(message),
      location_(std::move(location)) {}

Error Error::with_location(std::string location) const {
  return Error(code_, detail_, std::move(location));
}

}  // namespace compgap
