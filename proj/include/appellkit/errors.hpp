#pragma once

#include <stdexcept>
#include <string>

namespace appellkit {

/// Base of every error raised by the library. `kind()` is the stable name
/// reported by the CLI (e.g. "OutOfDomain").
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define APPELLKIT_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                          \
   public:                                                             \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  }

APPELLKIT_DEFINE_ERROR(DomainError);
APPELLKIT_DEFINE_ERROR(IndexError);
APPELLKIT_DEFINE_ERROR(DegreeCapExceeded);
APPELLKIT_DEFINE_ERROR(NonRestrictedInput);
APPELLKIT_DEFINE_ERROR(NotRegular);
APPELLKIT_DEFINE_ERROR(NotAxial);
APPELLKIT_DEFINE_ERROR(ExpansionMismatch);
APPELLKIT_DEFINE_ERROR(WeightMismatch);
APPELLKIT_DEFINE_ERROR(OutOfDomain);
APPELLKIT_DEFINE_ERROR(QuadratureFailure);
APPELLKIT_DEFINE_ERROR(UnitDependence);
APPELLKIT_DEFINE_ERROR(ExactnessExceeded);
APPELLKIT_DEFINE_ERROR(ModeDisagreement);

#undef APPELLKIT_DEFINE_ERROR

}  // namespace appellkit
