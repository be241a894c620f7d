#pragma once

#include <stdexcept>
#include <string>

namespace toricq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Zero generator where a ray was expected.
class InvalidRayError : public Error {
 public:
  using Error::Error;
};

/// Generators span a cone that contains a line.
class StrongConvexityError : public Error {
 public:
  using Error::Error;
};

/// Dimensions of the operands do not fit together.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Two maximal cones meet in something that is not a common face.
class OverlapError : public Error {
 public:
  OverlapError(std::size_t first, std::size_t second, const std::string& what)
      : Error(what), first_(first), second_(second) {}
  std::size_t first() const { return first_; }
  std::size_t second() const { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

/// One maximal cone lies inside another.
class ContainmentError : public Error {
 public:
  ContainmentError(std::size_t inner, std::size_t outer, const std::string& what)
      : Error(what), inner_(inner), outer_(outer) {}
  std::size_t inner() const { return inner_; }
  std::size_t outer() const { return outer_; }

 private:
  std::size_t inner_;
  std::size_t outer_;
};

/// Fan data that is well-formed JSON but not a valid fan description.
class InvalidFanError : public Error {
 public:
  using Error::Error;
};

/// The convex-support criterion does not apply to this fan shape.
class UnsupportedShapeError : public Error {
 public:
  using Error::Error;
};

/// An input violates a mathematical hypothesis of the operation.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of the operation (e.g. d = 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A computed result failed its own consistency check.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input.
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace toricq
