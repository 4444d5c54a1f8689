#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace alexcalc {

enum class ErrorCode {
  UnknownName,
  UnknownAtom,
  NoProjectivePlaneBoundary,
  AmbiguousBoundary,
  BoundaryMismatch,
  InvalidGenus,
  NotClosed,
  SiteNotFound,
  SiteAlreadyConsumed,
  InconsistentFlags,
  NotWhite,
  VertexMissing,
  ManifoldInput,
  NonCoprimeSlope,
  IncompatibleFilling,
  OddSingularCount,
  SyntaxError,
  CatalogError,
  FuelExhausted,
  Overflow,
};

std::string_view to_string(ErrorCode code);

// Half-open byte range into the parsed source text.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<SourceSpan> span = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  const std::optional<SourceSpan>& span() const noexcept { return span_; }

 private:
  ErrorCode code_;
  std::optional<SourceSpan> span_;
};

}  // namespace alexcalc
