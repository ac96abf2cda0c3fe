#include "cardqubo/penalty.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cardqubo {

PenaltySpec::PenaltySpec(std::size_t n, std::size_t m_target, double alpha)
    : n_(n), m_(m_target), alpha_(alpha) {
  if (n == 0) throw ValidationError("penalty dimension must be at least 1");
  if (!std::isfinite(alpha) || alpha <= 0.0)
    throw ValidationError("penalty weight alpha must be positive, got " + std::to_string(alpha));
  if (m_target < 1 || m_target > n)
    throw ValidationError("target cardinality " + std::to_string(m_target) +
                          " outside 1.." + std::to_string(n));
}

SymmetricMatrix penalty_matrix(std::size_t n, const PenaltyParams& params) {
  SymmetricMatrix c = SymmetricMatrix::all_ones(n).scaled(params.alpha);
  for (std::size_t i = 0; i < n; ++i) c.set(i, i, params.alpha + params.beta);
  return c;
}

SymmetricMatrix penalty_matrix(const PenaltySpec& spec) {
  const double m = static_cast<double>(spec.target());
  SymmetricMatrix c = SymmetricMatrix::all_ones(spec.size()).scaled(spec.alpha());
  for (std::size_t i = 0; i < spec.size(); ++i) c.set(i, i, spec.alpha() * (1.0 - 2.0 * m));
  return c;
}

double penalty_value(const PenaltySpec& spec, std::size_t k) {
  if (k > spec.size())
    throw ValidationError("cardinality " + std::to_string(k) + " exceeds dimension " +
                          std::to_string(spec.size()));
  const double kd = static_cast<double>(k);
  const double m = static_cast<double>(spec.target());
  return spec.alpha() * (kd * (kd - 2.0 * m));
}

SymmetricMatrix apply_constraint(const SymmetricMatrix& a, const PenaltySpec& spec) {
  if (a.size() != spec.size())
    throw DimensionError("penalty dimension " + std::to_string(spec.size()) +
                         " does not match matrix dimension " + std::to_string(a.size()));
  return a + penalty_matrix(spec);
}

PenaltyParams params_from_target(std::size_t m_target, double alpha) {
  if (!std::isfinite(alpha) || alpha <= 0.0)
    throw ValidationError("penalty weight alpha must be positive");
  if (m_target < 1) throw ValidationError("target cardinality must be at least 1");
  return {alpha, -2.0 * (alpha * static_cast<double>(m_target))};
}

TargetCardinality target_from_params(double alpha, double beta) {
  if (!std::isfinite(alpha) || alpha <= 0.0)
    throw ValidationError("penalty weight alpha must be positive");
  if (!std::isfinite(beta)) throw ValidationError("beta must be finite");
  const double m = -beta / (2.0 * alpha);
  // beta = -2 alpha M is itself rounded, so an integral M comes back only to
  // within a few ulps.
  const double nearest = std::round(m);
  return {m, std::abs(m - nearest) <= 1e-9 * std::max(1.0, std::abs(m))};
}

double safe_alpha(const SymmetricMatrix& a) { return 2.0 * a.abs_total() + 1.0; }

}  // namespace cardqubo
