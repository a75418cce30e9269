#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace clusterkit {

enum class Errc {
  IndexOutOfRange,
  MalformedInput,
  NotGeneralizedCartan,
  NotSymmetrizable,
  NotSkewSymmetrizable,
  NotAlmostPositive,
  NotBipartite,
  InfiniteType,
  ReductionDidNotTerminate,
  InvalidOrientation,
  NotSinkOrSource,
  CyclicOrientation,
  NotDivisible,
  DivisionByZero,
  ZeroNumerator,
  LaurentViolation,
  InconsistentSeed,
  BoundExceeded,
  PathInvalid,
  WindowInconsistent,
  VerificationFailed,
};

std::string_view errc_name(Errc code) noexcept;

// Every library failure is reported through this type (or a subclass that
// carries diagnostics); callers dispatch on code().
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace clusterkit
