#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace steklov {

enum class ErrorCode {
  LoopEdge,
  DuplicateEdge,
  VertexOutOfRange,
  BoundaryTooSmall,
  BoundaryOutOfRange,
  ComponentWithoutBoundary,
  DisconnectedBoundary,
  Unreachable,
  BadFamilyParameters,
  BadBoundarySpec,
  SingularInterior,
  ZeroFunction,
  DimensionMismatch,
  CentroidNotZero,
  ZeroOnBoundary,
  PreconditionFailed,
  LayersOverlap,
  DegenerateNormalization,
  NegativeDiscriminant,
  InvalidFlow,
  MassNotNormalized,
  ZeroWeights,
  NegativeWeight,
  DidNotConverge,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace steklov
