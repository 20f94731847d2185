#pragma once

#include <stdexcept>
#include <string>

namespace gwakit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A table or map violates the axioms of the structure it claims to be.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Requested enumeration exceeds the configured order bound.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Unknown catalog entry or malformed catalog file.
class CatalogError : public Error {
 public:
  using Error::Error;
};

/// Outcome of an exhaustive axiom check. On failure `message` names the
/// first violated condition together with its witnesses.
struct CheckResult {
  bool ok = true;
  std::string message;

  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string msg) { return {false, std::move(msg)}; }

  explicit operator bool() const { return ok; }
};

}  // namespace gwakit
