#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace diracforge {

/// Every failure the library reports carries one of these kinds. Kinds in the
/// "verification" group are hard failures of a checked identity; the rest are
/// configuration, precondition or input errors.
enum class ErrorKind {
  // precondition / configuration
  UnsupportedType,
  SystemMismatch,
  NotDominant,
  NotIntegral,
  IncompatiblePair,
  WindowTooSmall,
  WindowUnderflow,
  TooLarge,
  BadStructureConstants,
  NotOrthogonal,
  DimensionMismatch,
  NonGenericPolarization,
  NonTrivialBaseAction,
  NotPrequantized,
  NonGenericDirection,
  SingularShift,
  ConfigurationError,
  Unsupported,
  ParseError,
  IoError,
  // verification failures
  NotScalar,
  SpectralMismatch,
  TransferMismatch,
  PolarizationViolated,
  QRViolation,
  ConventionMismatch,
  InvariantViolated,
};

std::string_view str(ErrorKind kind);

/// True for the kinds that signal a failed identity rather than bad input.
bool isVerificationFailure(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

inline void require(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) fail(kind, what);
}

}  // namespace diracforge
