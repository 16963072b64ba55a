#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qmlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computed value left its admissible range or a structural assumption of the
// extension chain failed. Raised instead of clamping so that discretization
// artifacts stay visible.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

class MalformedPair : public Error {
 public:
  using Error::Error;
};

class SpaceMismatch : public Error {
 public:
  using Error::Error;
};

class NotAQuasiHomomorphism : public Error {
 public:
  using Error::Error;
};

// No member of a finite sample of simple quasi-measures matches the pullback
// of the point mass at `cell`. The sample is too small; nothing is wrong with
// the transformation.
class UncoveredPoint : public Error {
 public:
  UncoveredPoint(std::size_t cell, const std::string& what)
      : Error(what), cell_(cell) {}
  std::size_t cell() const { return cell_; }

 private:
  std::size_t cell_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qmlab
