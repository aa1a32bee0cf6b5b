#pragma once

#include <stdexcept>
#include <string>

namespace kato {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Gradient or Hessian requested at a point where the density is not differentiable.
class AtCuspSingularity : public Error {
 public:
  using Error::Error;
};

class ZeroDensity : public Error {
 public:
  using Error::Error;
};

class InvalidModel : public Error {
 public:
  using Error::Error;
};

class UnsupportedOrder : public Error {
 public:
  using Error::Error;
};

/// rho(center) too small for a logarithmic derivative to mean anything.
class ZeroCenterValue : public Error {
 public:
  using Error::Error;
};

class EmptyResult : public Error {
 public:
  using Error::Error;
};

class QuadratureNotConverged : public Error {
 public:
  using Error::Error;
};

class NodeEncountered : public Error {
 public:
  using Error::Error;
};

class MassMismatch : public Error {
 public:
  using Error::Error;
};

class NonMonotoneCumulative : public Error {
 public:
  using Error::Error;
};

}  // namespace kato
