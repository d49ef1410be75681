#pragma once

#include <stdexcept>
#include <string>

namespace dlab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A BFS frontier escaped the configured materialization bound.
class WindowOverflow : public Error {
 public:
  using Error::Error;
};

class NonPositiveDensity : public Error {
 public:
  using Error::Error;
};

/// An eventual-monotonicity certificate could not be produced.
class CertificationFailure : public Error {
 public:
  using Error::Error;
};

/// Internal invariant broken (e.g. a ball polynomial evaluating to a non-integer).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

class QuadratureFailure : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace dlab
