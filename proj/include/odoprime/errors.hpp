#pragma once

#include <stdexcept>
#include <string>

namespace odoprime {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Index or value outside the range an operation supports.
struct RangeError : Error {
  using Error::Error;
};

// The computation would need digits or holes beyond the configured depth.
// `tail_mass` carries the exact ignored hole mass as a decimal string when
// it is known at the throw site.
struct DepthError : Error {
  explicit DepthError(const std::string& what, std::string tail = "")
      : Error(what), tail_mass(std::move(tail)) {}
  std::string tail_mass;
};

// Precondition on the dynamical state (e.g. a point outside Y).
struct DomainError : Error {
  using Error::Error;
};

// A construction whose digit bands are empty at the configured sizes.
struct InfeasibleError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace odoprime
