#pragma once

#include <stdexcept>
#include <string>

namespace cl33 {

// Base of every error raised by the library. Callers that only care about
// "something geometric went wrong" can catch this one.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on the arguments was violated (grade out of range, non-unit
// normal, input outside the Hodge domain, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Extraction found grade 2..6 content where a paravector was expected.
class NonParavectorResidue : public Error {
 public:
  NonParavectorResidue(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

// Extraction found a covector component (coefficients of e_i+ and e_i- differ).
class CovectorResidue : public Error {
 public:
  CovectorResidue(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

class NotHodgeCompatible : public Error {
 public:
  NotHodgeCompatible(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

// Perspective with the eye on the projection plane.
class DegenerateConfiguration : public Error {
 public:
  using Error::Error;
};

class NotLinear : public Error {
 public:
  NotLinear(const std::string& what, double mismatch)
      : Error(what), mismatch_(mismatch) {}
  double mismatch() const { return mismatch_; }

 private:
  double mismatch_;
};

}  // namespace cl33
