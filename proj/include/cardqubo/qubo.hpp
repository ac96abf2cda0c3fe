#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cardqubo/errors.hpp"

namespace cardqubo {

// Soft upper bound on the dimension of any dense matrix the library builds.
inline constexpr std::size_t kMaxDimension = 10000;

// Square real matrix before symmetry is established, one inner vector per row.
using RawMatrix = std::vector<std::vector<double>>;

// Dense, row-major, exactly symmetric n x n matrix with finite entries.
//
// Instances can only be created from data that is already symmetric; use
// symmetrize() to turn an arbitrary square matrix into one.
class SymmetricMatrix {
 public:
  // n x n zero matrix.
  explicit SymmetricMatrix(std::size_t n);

  // Throws DimensionError if rows is not square and ValidationError if it
  // holds a non-finite value or rows[i][j] != rows[j][i].
  static SymmetricMatrix from_rows(const RawMatrix& rows);

  static SymmetricMatrix identity(std::size_t n);
  static SymmetricMatrix all_ones(std::size_t n);

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  std::span<const double> row(std::size_t i) const {
    return {entries_.data() + i * n_, n_};
  }
  std::span<const double> entries() const { return entries_; }

  // Sets (i, j) and (j, i) together so symmetry cannot be broken.
  void set(std::size_t i, std::size_t j, double value);

  SymmetricMatrix scaled(double factor) const;
  SymmetricMatrix operator+(const SymmetricMatrix& other) const;

  // Sum of all entries, i.e. 1^T A 1.
  double total() const;
  double abs_total() const;

  RawMatrix to_rows() const;

  friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

 private:
  SymmetricMatrix(std::size_t n, std::vector<double> entries);

  std::size_t n_;
  std::vector<double> entries_;
};

// Candidate solution x in {0,1}^n.
class BinaryVector {
 public:
  BinaryVector() = default;
  // Zero vector of length n.
  explicit BinaryVector(std::size_t n) : bits_(n, 0) {}
  // Throws ValidationError on any element other than 0 or 1.
  explicit BinaryVector(std::span<const int> bits);
  BinaryVector(std::initializer_list<int> bits);

  // Bit i of the result is bit i of mask (little-endian); requires n <= 64.
  static BinaryVector from_mask(std::uint64_t mask, std::size_t n);
  // Parses a string of '0'/'1' characters, index 0 first.
  static BinaryVector from_string(std::string_view text);

  std::size_t size() const { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  void flip(std::size_t i) { bits_[i] ^= 1U; }
  void set(std::size_t i, bool value) { bits_[i] = value ? 1 : 0; }

  // Number of ones, ||x||_1 (equal to ||x||^2 for binary x).
  std::size_t cardinality() const;
  std::string to_string() const;
  // Little-endian integer value; requires n <= 64.
  std::uint64_t to_mask() const;

  friend bool operator==(const BinaryVector&, const BinaryVector&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// Linear coefficients b of x^T A x + b.x.
class LinearTerm {
 public:
  explicit LinearTerm(std::vector<double> coefficients);
  std::size_t size() const { return coefficients_.size(); }
  double operator[](std::size_t i) const { return coefficients_[i]; }
  std::span<const double> coefficients() const { return coefficients_; }
  double dot(const BinaryVector& x) const;

 private:
  std::vector<double> coefficients_;
};

// Spin-space form z^T J z + h.z + offset with z in {-1,+1}^n.
struct IsingModel {
  SymmetricMatrix coupling;
  std::vector<double> field;
  double offset = 0.0;
};

using SpinVector = std::vector<int>;

// (raw + raw^T) / 2. Leaves x^T raw x unchanged for every x.
SymmetricMatrix symmetrize(const RawMatrix& raw);

// Adds b to the diagonal. Valid because x_i^2 == x_i on binary vectors, so
// x^T (A + diag(b)) x == x^T A x + b.x.
SymmetricMatrix fold_linear(const SymmetricMatrix& a, const LinearTerm& b);

// x^T A x.
double evaluate(const SymmetricMatrix& a, const BinaryVector& x);

// x^T R x for an arbitrary square matrix.
double evaluate(const RawMatrix& raw, const BinaryVector& x);

// Substituting x = (z + 1) / 2 into x^T A x gives
//   (1/4) z^T A z + (1/2) (A 1).z + (1/4) 1^T A 1,
// hence J = A/4, h = (A 1)/2, offset = sum(A)/4.
IsingModel to_ising(const SymmetricMatrix& a);

// z^T J z + h.z + offset. Throws ValidationError for spins outside {-1,+1}.
double ising_evaluate(const IsingModel& model, std::span<const int> spins);

// z = 2x - 1.
SpinVector to_spins(const BinaryVector& x);

}  // namespace cardqubo
