#pragma once

#include <stdexcept>
#include <string>

namespace gldep {

enum class Errc {
  NotPrime,
  NoIrreducibleFound,
  DivisionByZero,
  FieldMismatch,
  InfiniteField,
  NonCanonical,
  TooLarge,
  NotSquare,
  ShapeMismatch,
  DependentInput,
  Singular,
  TooFewMatrices,
  FieldTooSmall,
  InternalRankError,
  InternalSpanError,
  SpanExpansionFailed,
  ExhaustedBound,
  InvariantViolation,
  DimensionTooLarge,
  ParseError,
  InvalidArgument,
};

const char* errc_name(Errc code) noexcept;

/// Single exception type for the library; the code says what went wrong.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace gldep
