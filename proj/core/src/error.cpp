#include "tmg/error.hpp"

namespace tmg {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::InvalidDrawing: return "InvalidDrawing";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::NotParallel: return "NotParallel";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::MissingParameter: return "MissingParameter";
    case ErrorCode::TooLargeForOracle: return "TooLargeForOracle";
    case ErrorCode::NoFeasibleBipartition: return "NoFeasibleBipartition";
    case ErrorCode::StyleViolated: return "StyleViolated";
    case ErrorCode::IterationLimitExceeded: return "IterationLimitExceeded";
    case ErrorCode::NonContiguousGroups: return "NonContiguousGroups";
    case ErrorCode::ClearanceViolation: return "ClearanceViolation";
    case ErrorCode::ResolutionTooCoarse: return "ResolutionTooCoarse";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
  }
  return "Error";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace tmg
