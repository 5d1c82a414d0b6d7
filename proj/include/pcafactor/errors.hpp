#pragma once

#include <stdexcept>

namespace pcafactor {

// Dimension mismatches and out-of-range arguments.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Invalid input data: non-finite values, malformed CSV, zero-variance
// columns, broken model files.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Failed numerics: non-convergence, indefinite input where a positive
// semidefinite matrix was required.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pcafactor
