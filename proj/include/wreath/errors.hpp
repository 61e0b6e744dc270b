#pragma once

#include <stdexcept>
#include <string>

namespace wreath {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arguments violate a precondition (degree mismatch, non-bijection, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A configured size ceiling (order, points, vertices, subsets) was hit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A backtracking search ran past its time budget. No partial result is
/// ever returned alongside this error.
class SearchTimeout : public Error {
 public:
  using Error::Error;
};

/// Malformed group-spec text or structure file.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  explicit ParseError(const std::string& what) : Error(what) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_ = 0;
};

}  // namespace wreath
