#pragma once

#include <stdexcept>
#include <string>

namespace tmg {

enum class ErrorCode {
  ParseError,
  InvariantViolation,
  InvalidDrawing,
  UnknownVertex,
  UnknownEdge,
  NotParallel,
  NotClosed,
  NotSimple,
  DomainError,
  MissingParameter,
  TooLargeForOracle,
  NoFeasibleBipartition,
  StyleViolated,
  IterationLimitExceeded,
  NonContiguousGroups,
  ClearanceViolation,
  ResolutionTooCoarse,
  GenerationFailed,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace tmg
