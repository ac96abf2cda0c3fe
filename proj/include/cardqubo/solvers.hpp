#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "cardqubo/qubo.hpp"

namespace cardqubo {

// Geometric cooling: the temperature starts at t_initial and is multiplied by
// `cooling` after every `sweeps_per_temperature` full passes, stopping once it
// drops below t_final.
struct AnnealSchedule {
  double t_initial = 10.0;
  double t_final = 0.05;
  double cooling = 0.8;
  std::size_t sweeps_per_temperature = 2;

  // Throws ValidationError unless 0 < t_final < t_initial, 0 < cooling < 1
  // and sweeps_per_temperature >= 1.
  void validate() const;
  // Number of temperature levels visited.
  std::size_t temperature_steps() const;

  // Quick, deliberately under-converged cooling for histogram experiments.
  static AnnealSchedule fast() { return {10.0, 0.05, 0.8, 2}; }
  // Slow cooling that reliably reaches ground states at desk scale.
  static AnnealSchedule quality() { return {10.0, 0.05, 0.98, 10}; }
  // "fast" or "quality"; anything else is a ValidationError.
  static AnnealSchedule from_name(std::string_view name);
};

struct SolveResult {
  double cost = 0.0;  // evaluate(matrix, solution)
  BinaryVector solution;
  std::uint64_t seed = 0;  // zero for the exhaustive solvers
};

// Energy change evaluate(a, x ^ e_i) - evaluate(a, x), computed in O(n) as
// (1 - 2 x_i) * (a_ii + 2 * sum_{j != i} a_ij x_j).
double single_flip_delta(const SymmetricMatrix& a, const BinaryVector& x, std::size_t i);

// Single-bit-flip Metropolis annealing from a uniformly random start. Sites
// are visited in index order within a sweep and a flip with energy change d
// is accepted with probability min(1, exp(-d / T)). Returns the lowest-energy
// state visited. Deterministic in (a, schedule, seed).
SolveResult simulated_anneal(const SymmetricMatrix& a, const AnnealSchedule& schedule,
                             std::uint64_t seed);

inline constexpr std::size_t kMaxBruteForceDimension = 30;
inline constexpr double kMaxSubsetCount = 1e8;

// Exhaustive minimum over {0,1}^n by Gray-code enumeration with incremental
// updates. Ties (within 1e-9 relative) go to the vector with the smallest
// little-endian integer value. Throws CapacityError for n > 30.
SolveResult brute_force(const SymmetricMatrix& a);

// Exhaustive minimum over vectors with exactly m ones, enumerated in
// increasing little-endian integer order so ties resolve the same way as
// brute_force. Throws CapacityError when binomial(n, m) > 1e8.
SolveResult brute_force_cardinality(const SymmetricMatrix& a, std::size_t m);

// binomial(n, k) as a double; saturates to +inf instead of overflowing.
double binomial(std::size_t n, std::size_t k);

}  // namespace cardqubo
