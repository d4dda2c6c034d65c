#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace poromix {

/// Base class for every error raised by the library. `kind()` is a stable
/// identifier used by the CLI to map errors onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define POROMIX_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(const std::string& what) : Error(#Name, what) {}   \
  };

POROMIX_DEFINE_ERROR(SymmetryViolation)
POROMIX_DEFINE_ERROR(NotPositiveDefinite)
POROMIX_DEFINE_ERROR(InvalidParameter)
POROMIX_DEFINE_ERROR(BadNormal)
POROMIX_DEFINE_ERROR(SingularInertia)
POROMIX_DEFINE_ERROR(Degenerate)
POROMIX_DEFINE_ERROR(NoFront)
POROMIX_DEFINE_ERROR(UndefinedAtZero)
POROMIX_DEFINE_ERROR(MissingDecomposition)
POROMIX_DEFINE_ERROR(InsufficientSnapshots)
POROMIX_DEFINE_ERROR(ParseError)
POROMIX_DEFINE_ERROR(SchemaError)
POROMIX_DEFINE_ERROR(IoError)

#undef POROMIX_DEFINE_ERROR

/// Raised by the time integrator when an updated value is not finite.
class NonFinite : public Error {
 public:
  NonFinite(std::size_t step, const std::string& what)
      : Error("NonFinite", "step " + std::to_string(step) + ": " + what),
        step_(step) {}

  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

}  // namespace poromix
