#pragma once

#include <stdexcept>
#include <string>

namespace bellcong {

// Base of every error raised by the library. Each subclass corresponds to one
// failure kind so callers (and the CLI) can map them to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotPrime : public Error {
 public:
  using Error::Error;
};

class Overflow : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class IndexTooLarge : public Error {
 public:
  using Error::Error;
};

class ContextMismatch : public Error {
 public:
  using Error::Error;
};

// p divides a parameter that the identity requires to be a unit mod p.
class BadModulus : public Error {
 public:
  using Error::Error;
};

// The evaluation point x is divisible by p.
class BadPoint : public Error {
 public:
  using Error::Error;
};

// Writing a report stream failed.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace bellcong
