#pragma once

#include <stdexcept>
#include <string>

namespace so4 {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Raised by span_close when the bracket of two generators leaves their span.
class NotClosed : public Error {
 public:
  NotClosed(int first, int second)
      : Error("not closed under bracket: [g" + std::to_string(first) + ", g" +
              std::to_string(second) + "] leaves the span"),
        first_(first),
        second_(second) {}

  int first() const noexcept { return first_; }
  int second() const noexcept { return second_; }

 private:
  int first_;
  int second_;
};

/// A state the classification theorems rule out was reached.
class InternalInconsistency : public Error {
 public:
  explicit InternalInconsistency(const std::string& what)
      : Error("internal inconsistency: " + what) {}
};

class StabilizationNotSemisimple : public InternalInconsistency {
 public:
  StabilizationNotSemisimple()
      : InternalInconsistency("derived series stabilized at a non-semisimple algebra") {}
};

class UnsupportedDim : public Error {
 public:
  using Error::Error;
};

class NotSolvable : public Error {
 public:
  using Error::Error;
};

class InvalidLabel : public Error {
 public:
  using Error::Error;
};

/// The canonical representative needs a square root outside Q(i).
class NonconstructibleOverField : public Error {
 public:
  using Error::Error;
};

class NotATriple : public Error {
 public:
  using Error::Error;
};

}  // namespace so4
