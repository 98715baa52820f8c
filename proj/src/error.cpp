#include "actkit/error.hpp"

namespace actkit {

  std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::MalformedDocument: return "MalformedDocument";
      case ErrorKind::MissingIdentity: return "MissingIdentity";
      case ErrorKind::NonAssociative: return "NonAssociative";
      case ErrorKind::UnknownLabel: return "UnknownLabel";
      case ErrorKind::UnsupportedParams: return "UnsupportedParams";
      case ErrorKind::NotIdempotent: return "NotIdempotent";
      case ErrorKind::IdentityAxiomViolation: return "IdentityAxiomViolation";
      case ErrorKind::CompatibilityViolation: return "CompatibilityViolation";
      case ErrorKind::MonoidMismatch: return "MonoidMismatch";
      case ErrorKind::EmptyAct: return "EmptyAct";
      case ErrorKind::SizeBoundExceeded: return "SizeBoundExceeded";
      case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    }
    return "Unknown";
  }

  Error::Error(ErrorKind kind, std::string const& message, std::vector<std::string> details)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        _kind(kind),
        _details(std::move(details)) {}

}  // namespace actkit
