#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cardqubo/qubo.hpp"
#include "cardqubo/solvers.hpp"

namespace cardqubo {

// Where the experiment matrix comes from.
struct InstanceSource {
  enum class Kind { kGaussian, kPsd, kFile };

  Kind kind = Kind::kGaussian;
  std::filesystem::path path;  // kFile only
  bool symmetrize = false;     // kFile only

  // "gaussian", "psd" or "file:PATH".
  static InstanceSource parse(std::string_view text);
  std::string to_string() const;
};

// Builds the matrix described by `source`. For generated instances n and seed
// are used; for files n is taken from the file and must equal `n` when n > 0.
SymmetricMatrix make_instance(const InstanceSource& source, std::size_t n, std::uint64_t seed);

struct ExperimentConfig {
  std::size_t n = 30;
  std::size_t m_target = 8;
  std::vector<double> alphas = {0.0, 0.1, 0.2, 0.5, 1.0, 2.0, 10.0};
  std::size_t trials = 500;
  InstanceSource instance;
  std::uint64_t seed = 1;
  std::string schedule = "fast";
  // Worker threads; 0 picks std::thread::hardware_concurrency(). Output does
  // not depend on this value.
  std::size_t threads = 0;

  // Throws ValidationError on trials == 0, m_target outside 1..n, empty,
  // negative, non-finite or duplicate alphas, or an unknown schedule.
  void validate() const;
};

// Cardinality tally of all trials at one alpha.
struct AlphaHistogram {
  double alpha = 0.0;
  std::vector<std::uint64_t> counts;  // counts[k], k = 0..n
  double best_cost = 0.0;             // lowest returned cost, objective of A + C(alpha)
  double mean_cost = 0.0;

  std::uint64_t total() const;
  double fraction_at(std::size_t k) const;
  double mean_cardinality() const;
  // Most frequent cardinality; the smallest k wins ties.
  std::size_t mode() const;
};

struct HistogramSet {
  std::size_t n = 0;
  std::size_t trials = 0;
  std::vector<AlphaHistogram> groups;  // sorted by increasing alpha

  const AlphaHistogram& at(double alpha) const;
};

// Generates one instance from config.seed, then for every alpha runs
// config.trials independent anneals seeded with
// derive_seed(config.seed, alpha_index, trial_index), where alpha_index is the
// position in config.alphas. alpha == 0 anneals the raw matrix; alpha > 0
// anneals apply_constraint(A, PenaltySpec(n, m_target, alpha)).
HistogramSet run_experiment(const ExperimentConfig& config);

// Same, on a matrix supplied by the caller.
HistogramSet run_experiment(const ExperimentConfig& config, const SymmetricMatrix& a);

// Long-format CSV: header `alpha,cardinality,count,best_cost,mean_cost`, one
// row per (alpha, k) with k = 0..n, sorted by alpha then k. Numbers use the
// shortest round-trip representation, so output bytes depend only on h.
void write_histograms(const HistogramSet& h, std::ostream& out);
void write_histograms(const HistogramSet& h, const std::filesystem::path& path);

}  // namespace cardqubo
