#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace prasymp {

// Base class for all numerical failures raised by this library. The CLI maps
// these to exit code 1; usage problems map to exit code 2.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidInputError : public Error {
public:
  using Error::Error;
};

class OverflowError : public Error {
public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
public:
  using Error::Error;
};

// Evaluation requested exactly on a branch cut of a kernel.
class BranchCutError : public Error {
public:
  using Error::Error;
};

// A formula was evaluated at one of its singular points (cut endpoint, x=+-1
// in the Chebyshev-like case, ...).
class SingularError : public Error {
public:
  using Error::Error;
};

// A formula was asked for outside the region it is valid in, or inside the
// excluded neighborhood of a turning point.
class RegionError : public Error {
public:
  using Error::Error;
};

// A ratio-sequence term fell below the near-zero threshold; `index` names the
// offending k (1-based, matching w_k).
class NearZeroRatioError : public Error {
public:
  NearZeroRatioError(const std::string& msg, int index) : Error(msg), index(index) {}
  int index;
};

// Root bracketing / curve continuation failed.
class SolverError : public Error {
public:
  using Error::Error;
};

// The simultaneous root iteration ran out of iterations; `unconverged` lists
// the indices that did not meet the step tolerance.
class ConvergenceError : public Error {
public:
  ConvergenceError(const std::string& msg, std::vector<int> unconverged)
      : Error(msg), unconverged(std::move(unconverged)) {}
  std::vector<int> unconverged;
};

class UsageError : public Error {
public:
  using Error::Error;
};

}  // namespace prasymp
