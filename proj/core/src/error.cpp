#include "hypfan/error.hpp"

namespace hypfan {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::EmptyComplex: return "EmptyComplex";
    case ErrorCode::DanglingDart: return "DanglingDart";
    case ErrorCode::NonQuadrivalentVertex: return "NonQuadrivalentVertex";
    case ErrorCode::SelfPairedDart: return "SelfPairedDart";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NonDiskFace: return "NonDiskFace";
    case ErrorCode::SurfaceMismatch: return "SurfaceMismatch";
    case ErrorCode::NotFree: return "NotFree";
    case ErrorCode::NotInvolutive: return "NotInvolutive";
    case ErrorCode::NotIncidencePreserving: return "NotIncidencePreserving";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::DegenerateCorner: return "DegenerateCorner";
    case ErrorCode::NonGenericDirection: return "NonGenericDirection";
    case ErrorCode::InconsistentEdgeSigns: return "InconsistentEdgeSigns";
    case ErrorCode::CyclicFlowGraph: return "CyclicFlowGraph";
    case ErrorCode::NotOnSphere: return "NotOnSphere";
    case ErrorCode::DisjointLoops: return "DisjointLoops";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::NotAVertex: return "NotAVertex";
    case ErrorCode::VectorOutsideCorner: return "VectorOutsideCorner";
    case ErrorCode::IncompatibleInput: return "IncompatibleInput";
    case ErrorCode::NotASpherePair: return "NotASpherePair";
    case ErrorCode::WouldCreateDegenerateDomain: return "WouldCreateDegenerateDomain";
    case ErrorCode::FanSearchFailed: return "FanSearchFailed";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace hypfan
