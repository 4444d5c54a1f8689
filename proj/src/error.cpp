#include "alexcalc/error.hpp"

namespace alexcalc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::UnknownAtom: return "UnknownAtom";
    case ErrorCode::NoProjectivePlaneBoundary: return "NoProjectivePlaneBoundary";
    case ErrorCode::AmbiguousBoundary: return "AmbiguousBoundary";
    case ErrorCode::BoundaryMismatch: return "BoundaryMismatch";
    case ErrorCode::InvalidGenus: return "InvalidGenus";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::SiteNotFound: return "SiteNotFound";
    case ErrorCode::SiteAlreadyConsumed: return "SiteAlreadyConsumed";
    case ErrorCode::InconsistentFlags: return "InconsistentFlags";
    case ErrorCode::NotWhite: return "NotWhite";
    case ErrorCode::VertexMissing: return "VertexMissing";
    case ErrorCode::ManifoldInput: return "ManifoldInput";
    case ErrorCode::NonCoprimeSlope: return "NonCoprimeSlope";
    case ErrorCode::IncompatibleFilling: return "IncompatibleFilling";
    case ErrorCode::OddSingularCount: return "OddSingularCount";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::CatalogError: return "CatalogError";
    case ErrorCode::FuelExhausted: return "FuelExhausted";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<SourceSpan> span)
    : std::runtime_error(message), code_(code), span_(span) {}

}  // namespace alexcalc
