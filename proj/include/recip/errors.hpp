#pragma once

#include <stdexcept>
#include <string>

namespace recip {

/// Base of every error raised by the library. `kind()` is the stable name
/// printed by the command line front end.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept = 0;
};

/// An argument lies outside the domain on which an operation is defined.
class DomainError final : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "DomainError"; }
};

/// A composition whose denominator vanishes (0/0 or x/0 forms).
class DegenerateSum final : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "DegenerateSum"; }
};

/// A grid index outside the interior where a difference is defined.
class IndexError final : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "IndexError"; }
};

}  // namespace recip
