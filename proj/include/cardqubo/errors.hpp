#pragma once

#include <stdexcept>
#include <string>

namespace cardqubo {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shapes that do not line up (non-square input, mismatched n).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Values that break a type invariant (NaN, asymmetric entries, alpha <= 0,
// spins outside {-1,+1}, malformed files).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Work that would exceed a desk-scale guard (brute force beyond n = 30,
// binomial(n, m) above 1e8, n above 10000).
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace cardqubo
