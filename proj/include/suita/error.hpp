#pragma once

#include <stdexcept>
#include <string>

namespace suita {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside the mathematical domain (Im tau <= 0, Im tau below the
// evaluation floor, a vanishing product factor).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Caller violated an operation's precondition (empty lists, bad ranges).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A series or iteration did not reach its stopping criterion within the cap.
class NonConvergenceError : public Error {
 public:
  using Error::Error;
};

// Green's function requested on the diagonal, where g(w, w) = -inf.
class CoincidentPointsError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace suita
