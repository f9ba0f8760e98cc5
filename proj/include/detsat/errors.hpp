#pragma once

#include <stdexcept>
#include <string>

namespace detsat {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands were built in different rings, or shapes/lengths disagree.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

/// Matrix shape unsuitable for the operation (e.g. a non-square determinant).
class ShapeMismatch : public ContextMismatch {
 public:
  using ContextMismatch::ContextMismatch;
};

/// A Gröbner computation exceeded its pair, degree or wall-clock budget.
class ResourceExhausted : public Error {
 public:
  using Error::Error;
};

class NotZeroDimensional : public Error {
 public:
  using Error::Error;
};

class NotDivisible : public Error {
 public:
  using Error::Error;
};

/// An identity that holds by construction failed; always indicates a bug.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

class HypothesisNotSatisfied : public Error {
 public:
  using Error::Error;
};

class CertificateMissing : public Error {
 public:
  using Error::Error;
};

/// Malformed user input (polynomial text, alpha arrays, field strings).
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace detsat
