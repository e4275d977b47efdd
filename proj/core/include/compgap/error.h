#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace compgap {

// Every failure the library reports carries one of these codes. The code's
// name is the rule name surfaced by the CLI diagnostics.
enum class ErrorCode {
  // competence model
  InvalidId,
  DuplicateId,
  MissingParent,
  DepthViolation,
  OrphanInternal,
  UnknownId,
  UnknownTerm,
  AllocationSumMismatch,
  AllocationOutOfRange,
  IncompleteRcd,
  ScoreOutOfRange,
  // assessment
  WeightSumViolation,
  MixedKeys,
  EmptyResponseSet,
  MissingTypeValue,
  WeightCoverageGap,
  LevelMismatch,
  IncompleteMatrix,
  EmptyInput,
  // gaps
  ColumnMismatch,
  KindMismatch,
  NonpositiveN,
  SignViolation,
  // prioritization
  DivisionByZeroWeight,
  // ranking / inference
  UnknownCompetenceInRule,
  DegenerateVariance,
  OutOfRange,
  InvalidAlpha,
  TooFewMeans,
  UnsortedInput,
  NonpositiveVariance,
  CandidateMismatch,
  EmptyPointSet,
  // plumbing
  InvalidConfig,
  ParseError,
  IoError,
};

std::string_view error_code_name(ErrorCode code);

enum class ErrorCategory { Validation, Computation, Io };

ErrorCategory error_category(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string location = {});

  ErrorCode code() const noexcept { return code_; }
  std::string_view rule() const { return error_code_name(code_); }
  // File/line/row context, empty when not applicable.
  const std::string& location() const noexcept { return location_; }
  const std::string& detail() const noexcept { return detail_; }

  Error with_location(std::string location) const;

 private:
  ErrorCode code_;
  std::string detail_;
  std::string location_;
};

}  // namespace compgap
