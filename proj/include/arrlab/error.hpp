#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arrlab {

enum class Errc {
  MixedField,
  DivisionByZero,
  UnsupportedDegree,
  PoleAtEvaluationPoint,
  EqualLines,
  EqualPoints,
  SingularMatrix,
  InvalidArgument,
  ParseError,
  InconsistentStructure,
  ConsistencyViolation,
  NoFrame,
  OutsideTheorem,
  UnknownName,
};

std::string_view to_string(Errc code);

/// Every failure in the library surfaces as an Error carrying one of the
/// codes above; the CLI maps codes onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace arrlab
