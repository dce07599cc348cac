#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tcq {

// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inversion of zero, in a prime field, an extension field or the tensor
// algebra.
class ZeroInverse : public Error {
 public:
  using Error::Error;
};

// 0^0 is left undefined by every power operation.
class UndefinedPower : public Error {
 public:
  using Error::Error;
};

// find_root was asked for a root that cannot exist in the target field.
class NoRoot : public Error {
 public:
  using Error::Error;
};

// The two extension degrees must be coprime.
class CoprimeViolation : public Error {
 public:
  using Error::Error;
};

// An element that must be a unit is not one.
class NonInvertible : public Error {
 public:
  using Error::Error;
};

// Wire or file data that does not match the documented format.
class MalformedPayload : public Error {
 public:
  using Error::Error;
};

// A subfield degree that does not divide the extension degree.
class NotADivisor : public Error {
 public:
  using Error::Error;
};

// Violated mathematical precondition (non-prime modulus, reducible modulus,
// dimension mismatch, exhausted search budget, ...).
class MathDomainError : public Error {
 public:
  using Error::Error;
};

// Compression was attempted at a point where the birational inverse is not
// defined: the linear fiber system does not have a one-dimensional kernel,
// or a designated leading component of the kernel vector vanishes.
class OutOfGoodLocus : public Error {
 public:
  enum class Reason {
    kKernelDimension,   // kernel dimension != 1
    kZeroPart,          // x block or y block of the kernel vector is zero
    kLeadingComponent,  // designated leading component not invertible
  };

  OutOfGoodLocus(Reason reason, std::size_t kernel_dim, const std::string& what)
      : Error(what), reason_(reason), kernel_dim_(kernel_dim) {}

  Reason reason() const { return reason_; }
  std::size_t kernel_dim() const { return kernel_dim_; }

 private:
  Reason reason_;
  std::size_t kernel_dim_;
};

}  // namespace tcq
