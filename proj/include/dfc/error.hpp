#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dfc {

// Base of every error raised by the library. Callers that only care about
// "something was out of domain" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

// Gamma evaluated at a nonpositive integer.
class GammaPole : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class WindowTooShort : public Error {
 public:
  using Error::Error;
};

class SpecialValuePole : public Error {
 public:
  using Error::Error;
};

class DenominatorPochhammerZero : public Error {
 public:
  DenominatorPochhammerZero(const std::string& which, std::size_t k)
      : Error("denominator Pochhammer " + which + " vanishes at k=" + std::to_string(k)),
        which_(which),
        k_(k) {}

  const std::string& which() const noexcept { return which_; }
  std::size_t index() const noexcept { return k_; }

 private:
  std::string which_;
  std::size_t k_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace dfc
