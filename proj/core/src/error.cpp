#include "triwalk/error.hpp"

namespace triwalk {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kLoopEdge: return "loop-edge";
    case ErrorCode::kDuplicateEdge: return "duplicate-edge";
    case ErrorCode::kDisconnected: return "disconnected";
    case ErrorCode::kEmptyGraph: return "empty-graph";
    case ErrorCode::kUnknownVertex: return "unknown-vertex";
    case ErrorCode::kUnknownArc: return "unknown-arc";
    case ErrorCode::kInvalidPartition: return "invalid-partition";
    case ErrorCode::kSearchBudgetExceeded: return "search-budget-exceeded";
    case ErrorCode::kNotSymmetric: return "not-symmetric";
    case ErrorCode::kNotUnitary: return "not-unitary";
    case ErrorCode::kNotEigenvector: return "not-eigenvector";
    case ErrorCode::kOutOfRange: return "out-of-range";
    case ErrorCode::kDimensionCap: return "dimension-cap";
    case ErrorCode::kNumerical: return "numerical";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

}  // namespace triwalk
