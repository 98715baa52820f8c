#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace actkit {

  enum class ErrorKind {
    MalformedDocument,
    MissingIdentity,
    NonAssociative,
    UnknownLabel,
    UnsupportedParams,
    NotIdempotent,
    IdentityAxiomViolation,
    CompatibilityViolation,
    MonoidMismatch,
    EmptyAct,
    SizeBoundExceeded,
    BudgetExceeded,
  };

  std::string_view to_string(ErrorKind kind) noexcept;

  //! Every recoverable failure in the library is reported as an Error.
  //!
  //! `details` carries the labels (or numbers) the failure refers to, e.g. the
  //! violating triple (s, t, u) for NonAssociative, in the order they appear
  //! in the message.
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& message, std::vector<std::string> details = {});

    ErrorKind kind() const noexcept {
      return _kind;
    }
    std::vector<std::string> const& details() const noexcept {
      return _details;
    }

   private:
    ErrorKind                _kind;
    std::vector<std::string> _details;
  };

}  // namespace actkit
