#pragma once

#include <stdexcept>
#include <string>

namespace refchoice {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text: bad JSON, unknown labels, malformed rationals.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A value violates a structural constraint of its type.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A required choice problem is not stored in a (partial) dataset.
class MissingProblemError : public Error {
 public:
  using Error::Error;
};

/// A requested computation exceeds a configured size cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace refchoice
