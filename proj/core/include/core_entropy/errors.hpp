#pragma once

#include <stdexcept>
#include <string>

namespace core_entropy {

// Malformed textual input (angles, bit words, family names).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed input outside an operation's domain, e.g. theta = 0 where a
// nonzero angle is required, or a non-admissible kneading sequence.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A requested size exceeds a configured budget cap.
class BudgetError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// An iterative method ran out of budget. Carries the best bracket found.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double lo, double hi)
      : std::runtime_error(what), lo_(lo), hi_(hi) {}

  double lower() const noexcept { return lo_; }
  double upper() const noexcept { return hi_; }

 private:
  double lo_;
  double hi_;
};

}  // namespace core_entropy
