#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace triwalk {

enum class ErrorCode {
  kInvalidArgument,
  kParse,
  kLoopEdge,
  kDuplicateEdge,
  kDisconnected,
  kEmptyGraph,
  kUnknownVertex,
  kUnknownArc,
  kInvalidPartition,
  kSearchBudgetExceeded,
  kNotSymmetric,
  kNotUnitary,
  kNotEigenvector,
  kOutOfRange,
  kDimensionCap,
  kNumerical,
  kIo,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so that
// callers (notably the CLI) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace triwalk
