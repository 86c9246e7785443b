#include "steklov/error.hpp"

namespace steklov {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::BoundaryTooSmall: return "BoundaryTooSmall";
    case ErrorCode::BoundaryOutOfRange: return "BoundaryOutOfRange";
    case ErrorCode::ComponentWithoutBoundary: return "ComponentWithoutBoundary";
    case ErrorCode::DisconnectedBoundary: return "DisconnectedBoundary";
    case ErrorCode::Unreachable: return "Unreachable";
    case ErrorCode::BadFamilyParameters: return "BadFamilyParameters";
    case ErrorCode::BadBoundarySpec: return "BadBoundarySpec";
    case ErrorCode::SingularInterior: return "SingularInterior";
    case ErrorCode::ZeroFunction: return "ZeroFunction";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::CentroidNotZero: return "CentroidNotZero";
    case ErrorCode::ZeroOnBoundary: return "ZeroOnBoundary";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::LayersOverlap: return "LayersOverlap";
    case ErrorCode::DegenerateNormalization: return "DegenerateNormalization";
    case ErrorCode::NegativeDiscriminant: return "NegativeDiscriminant";
    case ErrorCode::InvalidFlow: return "InvalidFlow";
    case ErrorCode::MassNotNormalized: return "MassNotNormalized";
    case ErrorCode::ZeroWeights: return "ZeroWeights";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::DidNotConverge: return "DidNotConverge";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace steklov
