#pragma once

#include <stdexcept>
#include <string>

namespace walkohm {

enum class ErrorCode {
  NonPositiveConductance,
  EmptyEdgeList,
  Disconnected,
  NotReversible,
  InvalidBoundary,
  SingularSystem,
  NoAbsorbingState,
  UnreachableAbsorption,
  SingularIminusQ,
  SameVertex,
  FlowEdgeMismatch,
  NotUnitFlow,
  UnknownVertex,
  UnknownEdge,
  BadEdit,
  BridgeTouchesTerminal,
  NoInverse,
  RadiusTooLargeForDeskScale,
  BadArgument,
};

const char* error_name(ErrorCode code);

/// Domain error carrying a stable code; the CLI maps the code name into its
/// exit message so scripts can match on it.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

}  // namespace walkohm
