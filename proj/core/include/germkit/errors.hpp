#pragma once

#include <stdexcept>
#include <string>

namespace germkit {

// Every failure the library can report, one kind per contract clause.
// The CLI maps ParseError to exit 1 and everything else to exit 2.
enum class Errc {
  DivisionByZero,
  NonInvertible,
  RingMismatch,
  IllegalSubstitution,
  SingularMatrix,
  TruncatedEvaluation,
  NotRegularError,
  TruncationBudgetExhausted,
  SearchExhausted,
  AllVanish,
  TooManyRoots,
  TransversalityFailure,
  SeedTooShort,
  DivisibilityFailure,
  HenselStall,
  OnDiscriminantLocus,
  NotARoot,
  PoleAtPoint,
  ParseError,
  Internal,
};

const char* errc_name(Errc k);

class Error : public std::runtime_error {
public:
  Error(Errc kind, std::string detail)
      : std::runtime_error(std::string(errc_name(kind)) + ": " + detail),
        kind_(kind), detail_(std::move(detail)) {}

  Errc kind() const { return kind_; }
  const std::string& detail() const { return detail_; }

private:
  Errc kind_;
  std::string detail_;
};

[[noreturn]] inline void fail(Errc kind, std::string detail) {
  throw Error(kind, std::move(detail));
}

} // namespace germkit
