#pragma once

#include <stdexcept>
#include <string>

namespace nhosc {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// A z̄⁻¹ term reached an antiderivative; carries the offending coefficient.
class LogObstruction : public Error {
 public:
  LogObstruction(std::string coefficient)
      : Error("logarithmic term with coefficient " + coefficient),
        coefficient_(std::move(coefficient)) {}

  const std::string& coefficient() const { return coefficient_; }

 private:
  std::string coefficient_;
};

class NegativePower : public Error {
 public:
  using Error::Error;
};

class ZeroConstant : public Error {
 public:
  using Error::Error;
};

class RealityViolation : public Error {
 public:
  using Error::Error;
};

class ParamMismatch : public Error {
 public:
  using Error::Error;
};

class UnsolvableConstraints : public Error {
 public:
  using Error::Error;
};

class NonlinearResidual : public Error {
 public:
  using Error::Error;
};

class TailBoundViolated : public Error {
 public:
  using Error::Error;
};

}  // namespace nhosc
