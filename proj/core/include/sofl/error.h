#ifndef SOFL_ERROR_H_
#define SOFL_ERROR_H_

#include <stdexcept>
#include <string>

namespace sofl {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two inputs that must be distinct coincide (e.g. a pair circle through p, p).
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

// Precondition violation on caller-supplied data.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A reduction weight of the wrong sign.
class InvalidDelta : public Error {
 public:
  using Error::Error;
};

// An optimized search returned a placement that breaks non-overlap.
class ValidationFailure : public Error {
 public:
  using Error::Error;
};

// A brute-force oracle was asked to enumerate beyond its size guard.
class TooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace sofl

#endif  // SOFL_ERROR_H_
