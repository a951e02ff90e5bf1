#pragma once

#include <stdexcept>
#include <string>

namespace fraclab {

// Caller broke a documented precondition (dimension mismatch, window too small, ...).
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured resource ceiling (precision, enumeration budget) was hit.
class LimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

class NotFound : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Numerically degenerate input for which the requested quantity is undefined.
class DegenerateInstance : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw ContractViolation(what);
}

}  // namespace fraclab
