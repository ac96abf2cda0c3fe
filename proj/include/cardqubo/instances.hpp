#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>

#include "cardqubo/qubo.hpp"

namespace cardqubo {

// (R + R^T) / 2 with R an n x n matrix of i.i.d. standard normals drawn in
// row-major order from Rng(seed).
SymmetricMatrix gaussian_symmetric(std::size_t n, std::uint64_t seed);

// G^T G / n with G an n x n matrix of i.i.d. standard normals drawn in
// row-major order from Rng(seed): the sample covariance of n observations of
// n independent unit-variance assets, so the diagonal is close to 1. Positive
// semi-definite (almost surely definite), so x^T A x >= 0 everywhere and the
// unconstrained minimum is the zero vector.
SymmetricMatrix psd(std::size_t n, std::uint64_t seed);

// Whitespace-separated text, one row per line, every value written with the
// shortest representation that round-trips to the same double.
void save_matrix(const SymmetricMatrix& a, const std::filesystem::path& path);

// Inverse of save_matrix. Blank lines are ignored and n is the row count.
// Malformed numbers or ragged rows raise ValidationError / DimensionError
// naming the 1-based line. Asymmetric data is rejected, reporting the largest
// |a_ij - a_ji|, unless `symmetrize_input` is set, in which case the matrix is
// replaced by (A + A^T) / 2.
SymmetricMatrix load_matrix(const std::filesystem::path& path, bool symmetrize_input = false);

}  // namespace cardqubo
