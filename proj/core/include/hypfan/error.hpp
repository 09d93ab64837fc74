#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypfan {

enum class ErrorCode {
  // input parsing / structure
  ParseError,
  MalformedInput,
  EmptyComplex,
  DanglingDart,
  NonQuadrivalentVertex,
  SelfPairedDart,
  Disconnected,
  NonDiskFace,
  SurfaceMismatch,
  // involutions
  NotFree,
  NotInvolutive,
  NotIncidencePreserving,
  // fans
  UnknownLabel,
  DimensionMismatch,
  ZeroVector,
  DegenerateCorner,
  // flows
  NonGenericDirection,
  InconsistentEdgeSigns,
  CyclicFlowGraph,
  // sphere2
  NotOnSphere,
  DisjointLoops,
  NotBipartite,
  // moves
  NotAVertex,
  VectorOutsideCorner,
  IncompatibleInput,
  NotASpherePair,
  WouldCreateDegenerateDomain,
  FanSearchFailed,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a machine-readable code. Every recoverable failure in
/// the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hypfan
