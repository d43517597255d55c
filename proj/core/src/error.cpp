#include "freevertex/error.hpp"

namespace freevertex {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonUniformEdge: return "NonUniformEdge";
    case ErrorKind::DanglingVariable: return "DanglingVariable";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InvalidColoring: return "InvalidColoring";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::InternalInvariant: return "InternalInvariant";
    case ErrorKind::NotTwoColorable: return "NotTwoColorable";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::GenerationFailed: return "GenerationFailed";
  }
  return "Unknown";
}

}  // namespace freevertex
