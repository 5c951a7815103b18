#pragma once

#include <stdexcept>
#include <string>

namespace cplanes {

/// Input outside the mathematical domain of an operation (E >= 0, |x| > 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation requested at a point where an operator or coordinate is singular.
/// The tag names the singular set: "origin", "on-axis", "pole".
class SingularPointError : public DomainError {
 public:
  SingularPointError(std::string tag, const std::string& what)
      : DomainError(what + " [" + tag + "]"), tag_(std::move(tag)) {}

  const std::string& tag() const noexcept { return tag_; }

 private:
  std::string tag_;
};

/// A value claimed to satisfy a structural invariant does not.
/// The name identifies which invariant failed, e.g. "z2 = i*conj(z1)".
class InvariantViolation : public DomainError {
 public:
  InvariantViolation(std::string invariant, const std::string& what)
      : DomainError(what + " (violated: " + invariant + ")"),
        invariant_(std::move(invariant)) {}

  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

}  // namespace cplanes
