#include "diracforge/errors.hpp"

namespace diracforge {

std::string_view str(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnsupportedType: return "UnsupportedType";
    case ErrorKind::SystemMismatch: return "SystemMismatch";
    case ErrorKind::NotDominant: return "NotDominant";
    case ErrorKind::NotIntegral: return "NotIntegral";
    case ErrorKind::IncompatiblePair: return "IncompatiblePair";
    case ErrorKind::WindowTooSmall: return "WindowTooSmall";
    case ErrorKind::WindowUnderflow: return "WindowUnderflow";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::BadStructureConstants: return "BadStructureConstants";
    case ErrorKind::NotOrthogonal: return "NotOrthogonal";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonGenericPolarization: return "NonGenericPolarization";
    case ErrorKind::NonTrivialBaseAction: return "NonTrivialBaseAction";
    case ErrorKind::NotPrequantized: return "NotPrequantized";
    case ErrorKind::NonGenericDirection: return "NonGenericDirection";
    case ErrorKind::SingularShift: return "SingularShift";
    case ErrorKind::ConfigurationError: return "ConfigurationError";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::NotScalar: return "NotScalar";
    case ErrorKind::SpectralMismatch: return "SpectralMismatch";
    case ErrorKind::TransferMismatch: return "TransferMismatch";
    case ErrorKind::PolarizationViolated: return "PolarizationViolated";
    case ErrorKind::QRViolation: return "QRViolation";
    case ErrorKind::ConventionMismatch: return "ConventionMismatch";
    case ErrorKind::InvariantViolated: return "InvariantViolated";
  }
  return "Unknown";
}

bool isVerificationFailure(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotScalar:
    case ErrorKind::SpectralMismatch:
    case ErrorKind::TransferMismatch:
    case ErrorKind::PolarizationViolated:
    case ErrorKind::QRViolation:
    case ErrorKind::ConventionMismatch:
    case ErrorKind::InvariantViolated:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(str(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace diracforge
