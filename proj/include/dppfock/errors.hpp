#pragma once

#include <stdexcept>
#include <string>

namespace dppfock {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input matrix is not Hermitian within tolerance.
class NotHermitian : public Error {
 public:
  using Error::Error;
};

// An eigenvalue lies outside [0,1] beyond the allowed tolerance; the matrix
// cannot define a point process.
class SpectrumOutOfRange : public Error {
 public:
  using Error::Error;
};

class BadInterval : public Error {
 public:
  using Error::Error;
};

// Enumeration over 2^n subsets was requested for n beyond the hard guard.
class GroundSetTooLarge : public Error {
 public:
  using Error::Error;
};

class OverlappingBlocks : public Error {
 public:
  using Error::Error;
};

class UnboundedSupport : public Error {
 public:
  using Error::Error;
};

class SplitMismatch : public Error {
 public:
  using Error::Error;
};

// The two inner-product determinant formulas disagreed; indicates a
// block-extraction bug, not a user error.
class FormulaMismatch : public Error {
 public:
  using Error::Error;
};

class NotAProjector : public Error {
 public:
  using Error::Error;
};

class NumericalDegeneracy : public Error {
 public:
  using Error::Error;
};

// Malformed CLI configuration (exit code 2).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A verification suite produced a residual above tolerance (exit code 1).
class SuiteFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace dppfock
