#pragma once

#include <stdexcept>
#include <string>

namespace tpa {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad syntax, unknown names, shape mismatches.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A computation hit its configured bound (degree, iteration, nilpotency).
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// A precondition on the mathematical input failed (e.g. gldim too large,
/// algebra not basic).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace tpa
