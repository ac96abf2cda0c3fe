#include "cardqubo/solvers.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "cardqubo/rng.hpp"

namespace cardqubo {
namespace {

bool improves(double candidate, double best) {
  return candidate < best - 1e-9 * std::max(1.0, std::abs(best));
}

bool ties(double candidate, double best) {
  return std::abs(candidate - best) <= 1e-9 * std::max(1.0, std::abs(best));
}

// Keeps local fields f_i = sum_j a_ij x_j so that flip deltas cost O(1) and
// applying a flip costs O(n).
class FlipState {
 public:
  FlipState(const SymmetricMatrix& a, BinaryVector x) : a_(a), x_(std::move(x)), field_(a.size()) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!x_[i]) continue;
      const auto r = a.row(i);
      for (std::size_t j = 0; j < a.size(); ++j) field_[j] += r[j];
    }
    for (std::size_t i = 0; i < a.size(); ++i)
      if (x_[i]) energy_ += field_[i];
  }

  double delta(std::size_t i) const {
    const double aii = a_(i, i);
    const double others = field_[i] - (x_[i] ? aii : 0.0);
    return (x_[i] ? -1.0 : 1.0) * (aii + 2.0 * others);
  }

  void flip(std::size_t i, double delta) {
    const double sign = x_[i] ? -1.0 : 1.0;
    const auto r = a_.row(i);
    for (std::size_t j = 0; j < field_.size(); ++j) field_[j] += sign * r[j];
    x_.flip(i);
    energy_ += delta;
  }

  const BinaryVector& state() const { return x_; }
  double energy() const { return energy_; }

 private:
  const SymmetricMatrix& a_;
  BinaryVector x_;
  std::vector<double> field_;
  double energy_ = 0.0;
};

}  // namespace

void AnnealSchedule::validate() const {
  if (!(t_initial > 0.0) || !std::isfinite(t_initial))
    throw ValidationError("initial temperature must be positive");
  if (!(t_final > 0.0) || !(t_final < t_initial))
    throw ValidationError("final temperature must lie in (0, t_initial)");
  if (!(cooling > 0.0 && cooling < 1.0)) throw ValidationError("cooling factor must lie in (0, 1)");
  if (sweeps_per_temperature < 1) throw ValidationError("need at least one sweep per temperature");
}

std::size_t AnnealSchedule::temperature_steps() const {
  validate();
  std::size_t steps = 0;
  for (double t = t_initial; t >= t_final; t *= cooling) ++steps;
  return steps;
}

AnnealSchedule AnnealSchedule::from_name(std::string_view name) {
  if (name == "fast") return fast();
  if (name == "quality") return quality();
  throw ValidationError("unknown schedule '" + std::string(name) + "' (expected fast or quality)");
}

double single_flip_delta(const SymmetricMatrix& a, const BinaryVector& x, std::size_t i) {
  if (x.size() != a.size()) throw DimensionError("binary vector does not match matrix dimension");
  if (i >= a.size()) throw DimensionError("flip index " + std::to_string(i) + " out of range");
  const auto r = a.row(i);
  double others = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (j != i && x[j]) others += r[j];
  return (x[i] ? -1.0 : 1.0) * (r[i] + 2.0 * others);
}

SolveResult simulated_anneal(const SymmetricMatrix& a, const AnnealSchedule& schedule,
                             std::uint64_t seed) {
  schedule.validate();
  const std::size_t n = a.size();
  Rng rng(seed);

  BinaryVector start(n);
  for (std::size_t i = 0; i < n; ++i) start.set(i, (rng() >> 63) != 0);
  FlipState s(a, std::move(start));

  BinaryVector best = s.state();
  double best_energy = s.energy();

  for (double t = schedule.t_initial; t >= schedule.t_final; t *= schedule.cooling) {
    for (std::size_t sweep = 0; sweep < schedule.sweeps_per_temperature; ++sweep) {
      for (std::size_t i = 0; i < n; ++i) {
        const double d = s.delta(i);
        if (d > 0.0 && rng.uniform() >= std::exp(-d / t)) continue;
        s.flip(i, d);
        if (s.energy() < best_energy) {
          best_energy = s.energy();
          best = s.state();
        }
      }
    }
  }
  return {evaluate(a, best), std::move(best), seed};
}

SolveResult brute_force(const SymmetricMatrix& a) {
  const std::size_t n = a.size();
  if (n > kMaxBruteForceDimension)
    throw CapacityError("brute force limited to n <= " + std::to_string(kMaxBruteForceDimension) +
                        ", got " + std::to_string(n));
  FlipState s(a, BinaryVector(n));
  std::uint64_t code = 0;
  std::uint64_t best_code = 0;
  double best_energy = 0.0;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t g = 1; g < count; ++g) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(g));
    s.flip(bit, s.delta(bit));
    code ^= std::uint64_t{1} << bit;
    const double e = s.energy();
    if (improves(e, best_energy) || (ties(e, best_energy) && code < best_code)) {
      best_energy = e;
      best_code = code;
    }
  }
  BinaryVector x = BinaryVector::from_mask(best_code, n);
  return {evaluate(a, x), std::move(x), 0};
}

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    if (!std::isfinite(r)) return std::numeric_limits<double>::infinity();
  }
  return std::round(r);
}

SolveResult brute_force_cardinality(const SymmetricMatrix& a, std::size_t m) {
  const std::size_t n = a.size();
  if (m > n)
    throw ValidationError("cardinality " + std::to_string(m) + " exceeds dimension " +
                          std::to_string(n));
  if (binomial(n, m) > kMaxSubsetCount)
    throw CapacityError("binomial(" + std::to_string(n) + ", " + std::to_string(m) +
                        ") exceeds the enumeration limit of 1e8");

  // Colexicographic order over index sets is increasing integer order.
  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i;
  auto energy_of = [&] {
    double e = 0.0;
    for (std::size_t p = 0; p < m; ++p) {
      const auto r = a.row(idx[p]);
      e += r[idx[p]];
      for (std::size_t q = 0; q < p; ++q) e += 2.0 * r[idx[q]];
    }
    return e;
  };

  std::vector<std::size_t> best = idx;
  double best_energy = energy_of();
  while (true) {
    std::size_t j = 0;
    while (j < m && idx[j] + 1 == (j + 1 < m ? idx[j + 1] : n)) ++j;
    if (j == m) break;
    ++idx[j];
    for (std::size_t p = 0; p < j; ++p) idx[p] = p;
    const double e = energy_of();
    if (improves(e, best_energy)) {
      best_energy = e;
      best = idx;
    }
  }

  BinaryVector x(n);
  for (std::size_t i : best) x.set(i, true);
  return {evaluate(a, x), std::move(x), 0};
}

}  // namespace cardqubo
