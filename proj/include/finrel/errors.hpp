#pragma once

#include <stdexcept>
#include <string>

namespace finrel {

// Root of every error raised by the library. The CLI maps it to exit code 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside its mathematical domain (f > n, probability outside [0,1], ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// The requested quantity does not exist, e.g. inverting a confidence that is identically 0.
class NoSolutionError : public Error {
 public:
  using Error::Error;
};

// c exactly 0 or 1 passed to an inversion; the limits are left to the caller.
class BoundaryError : public Error {
 public:
  using Error::Error;
};

// A finite plan with m = 0 has no reliability steps.
class DegeneratePlanError : public Error {
 public:
  using Error::Error;
};

// Input exceeds a cost guard of an oracle routine.
class UnsupportedSizeError : public Error {
 public:
  using Error::Error;
};

}  // namespace finrel
