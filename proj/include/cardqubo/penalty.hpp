#pragma once

#include <cstddef>

#include "cardqubo/qubo.hpp"

namespace cardqubo {

// Weight and diagonal shift of the penalty C = alpha * J_n + beta * I_n.
struct PenaltyParams {
  double alpha;
  double beta;
};

// Target cardinality recovered from (alpha, beta). The value need not be an
// integer; callers that need one must check `integral` (true when value is
// within 1e-9 relative of an integer) and round themselves.
struct TargetCardinality {
  double value;
  bool integral;
};

// Cardinality penalty C(alpha) = alpha * (J_n - 2 M I_n) that pulls the
// minimizers of A + C toward ||x||_1 == M.
//
// alpha must be strictly positive (a negative weight turns the minimum into a
// maximum) and 1 <= M <= n.
class PenaltySpec {
 public:
  // Throws ValidationError when an invariant is violated.
  PenaltySpec(std::size_t n, std::size_t m_target, double alpha);

  std::size_t size() const { return n_; }
  std::size_t target() const { return m_; }
  double alpha() const { return alpha_; }
  double beta() const { return -2.0 * (alpha_ * static_cast<double>(m_)); }

 private:
  std::size_t n_;
  std::size_t m_;
  double alpha_;
};

// Off-diagonal alpha, diagonal alpha * (1 - 2M).
SymmetricMatrix penalty_matrix(const PenaltySpec& spec);

// alpha * J_n + beta * I_n for arbitrary parameters.
SymmetricMatrix penalty_matrix(std::size_t n, const PenaltyParams& params);

// x^T C x for any x with cardinality k: alpha k^2 + beta k = alpha((k - M)^2 - M^2).
double penalty_value(const PenaltySpec& spec, std::size_t k);

// A + C(alpha).
SymmetricMatrix apply_constraint(const SymmetricMatrix& a, const PenaltySpec& spec);

// beta = -2 alpha M.
PenaltyParams params_from_target(std::size_t m_target, double alpha);

// M = -beta / (2 alpha).
TargetCardinality target_from_params(double alpha, double beta);

// Smallest weight this library guarantees to force cardinality M:
// 2 * sum |a_ij| + 1. Moving from k = M to any k != M raises the penalty by
// alpha (k - M)^2 >= alpha, while x^T A x spans at most 2 * sum |a_ij| over
// all binary x, so every global minimizer of A + C(alpha) has cardinality M
// once alpha exceeds that span. The bound is loose.
double safe_alpha(const SymmetricMatrix& a);

}  // namespace cardqubo
