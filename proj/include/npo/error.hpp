#pragma once

#include <stdexcept>
#include <string>

namespace npo {

// Base for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Iterative kernel (root polish, eigen iteration) failed to converge.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Reference corpus could not be parsed or failed its integrity check.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace npo
