#pragma once

#include <stdexcept>
#include <string>

namespace mdeg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value violates a named invariant ("gcd(p,q)=1", "det=1", ...).
class InvalidInput : public Error {
 public:
  InvalidInput(std::string constraint, const std::string& message)
      : Error(message), constraint_(std::move(constraint)) {}
  const std::string& constraint() const noexcept { return constraint_; }

 private:
  std::string constraint_;
};

/// Well-formed input outside the supported model (e.g. Seifert data with
/// spherical geometry, which must be entered as a named family).
class UnsupportedInput : public Error {
 public:
  using Error::Error;
};

class NoFamily : public Error {
 public:
  using Error::Error;
};

class NotDecomposable : public Error {
 public:
  NotDecomposable(std::string form, const std::string& message)
      : Error(message), form_(std::move(form)) {}
  const std::string& form() const noexcept { return form_; }

 private:
  std::string form_;
};

}  // namespace mdeg
