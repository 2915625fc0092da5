#pragma once

#include <stdexcept>
#include <string>

namespace froblab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// An enumeration or search would exceed its configured cap.
class CapacityExceeded : public Error {
 public:
  using Error::Error;
};

class NotAFace : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Input outside the class of problems the routine decides exactly.
class UnsupportedInput : public Error {
 public:
  using Error::Error;
};

class UnsupportedField : public Error {
 public:
  using Error::Error;
};

class InvalidParameters : public Error {
 public:
  using Error::Error;
};

class DegreeOverflow : public Error {
 public:
  using Error::Error;
};

}  // namespace froblab
