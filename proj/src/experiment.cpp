#include "cardqubo/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <set>
#include <thread>

#include "cardqubo/instances.hpp"
#include "cardqubo/penalty.hpp"
#include "cardqubo/rng.hpp"

namespace cardqubo {
namespace {

std::string format_double(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

struct TrialOutcome {
  std::size_t cardinality = 0;
  double cost = 0.0;
};

}  // namespace

InstanceSource InstanceSource::parse(std::string_view text) {
  if (text == "gaussian") return {Kind::kGaussian, {}, false};
  if (text == "psd") return {Kind::kPsd, {}, false};
  if (text.starts_with("file:") && text.size() > 5)
    return {Kind::kFile, std::filesystem::path(std::string(text.substr(5))), false};
  throw ValidationError("unknown instance '" + std::string(text) +
                        "' (expected gaussian, psd or file:PATH)");
}

std::string InstanceSource::to_string() const {
  switch (kind) {
    case Kind::kGaussian: return "gaussian";
    case Kind::kPsd: return "psd";
    case Kind::kFile: return "file:" + path.string();
  }
  return {};
}

SymmetricMatrix make_instance(const InstanceSource& source, std::size_t n, std::uint64_t seed) {
  switch (source.kind) {
    case InstanceSource::Kind::kGaussian: return gaussian_symmetric(n, seed);
    case InstanceSource::Kind::kPsd: return psd(n, seed);
    case InstanceSource::Kind::kFile: {
      SymmetricMatrix a = load_matrix(source.path, source.symmetrize);
      if (n > 0 && a.size() != n)
        throw DimensionError("matrix file has dimension " + std::to_string(a.size()) +
                             ", expected " + std::to_string(n));
      return a;
    }
  }
  throw ValidationError("invalid instance source");
}

void ExperimentConfig::validate() const {
  if (trials == 0) throw ValidationError("trials must be at least 1");
  if (instance.kind != InstanceSource::Kind::kFile && n == 0)
    throw ValidationError("n must be at least 1");
  if (m_target < 1 || (n > 0 && m_target > n))
    throw ValidationError("target cardinality must lie in 1..n");
  if (alphas.empty()) throw ValidationError("at least one alpha is required");
  std::set<double> seen;
  for (double a : alphas) {
    if (!std::isfinite(a) || a < 0.0) throw ValidationError("alphas must be finite and >= 0");
    if (!seen.insert(a).second) throw ValidationError("duplicate alpha " + format_double(a));
  }
  AnnealSchedule::from_name(schedule);
}

std::uint64_t AlphaHistogram::total() const {
  std::uint64_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

double AlphaHistogram::fraction_at(std::size_t k) const {
  const auto t = total();
  return (t == 0 || k >= counts.size()) ? 0.0
                                        : static_cast<double>(counts[k]) / static_cast<double>(t);
}

double AlphaHistogram::mean_cardinality() const {
  const auto t = total();
  if (t == 0) return 0.0;
  double s = 0.0;
  for (std::size_t k = 0; k < counts.size(); ++k) s += static_cast<double>(k * counts[k]);
  return s / static_cast<double>(t);
}

std::size_t AlphaHistogram::mode() const {
  return static_cast<std::size_t>(std::max_element(counts.begin(), counts.end()) - counts.begin());
}

const AlphaHistogram& HistogramSet::at(double alpha) const {
  for (const auto& g : groups)
    if (g.alpha == alpha) return g;
  throw ValidationError("no histogram for alpha " + format_double(alpha));
}

HistogramSet run_experiment(const ExperimentConfig& config) {
  config.validate();
  return run_experiment(config, make_instance(config.instance, config.n, config.seed));
}

HistogramSet run_experiment(const ExperimentConfig& config, const SymmetricMatrix& a) {
  config.validate();
  const std::size_t n = a.size();
  if (config.m_target > n) throw ValidationError("target cardinality exceeds matrix dimension");
  const AnnealSchedule schedule = AnnealSchedule::from_name(config.schedule);

  std::vector<SymmetricMatrix> problems;
  problems.reserve(config.alphas.size());
  for (double alpha : config.alphas)
    problems.push_back(alpha == 0.0 ? a : apply_constraint(a, PenaltySpec(n, config.m_target, alpha)));

  // Every (alpha, trial) job writes only its own slot, so the merged result is
  // independent of scheduling.
  const std::size_t jobs = config.alphas.size() * config.trials;
  std::vector<TrialOutcome> outcomes(jobs);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t job = next++; job < jobs; job = next++) {
      const std::size_t group = job / config.trials;
      const std::size_t trial = job % config.trials;
      const auto r = simulated_anneal(problems[group], schedule, derive_seed(config.seed, group, trial));
      outcomes[job] = {r.solution.cardinality(), r.cost};
    }
  };
  std::size_t threads = config.threads ? config.threads : std::thread::hardware_concurrency();
  threads = std::clamp<std::size_t>(threads, 1, jobs);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  HistogramSet h;
  h.n = n;
  h.trials = config.trials;
  for (std::size_t g = 0; g < config.alphas.size(); ++g) {
    AlphaHistogram hist;
    hist.alpha = config.alphas[g];
    hist.counts.assign(n + 1, 0);
    hist.best_cost = outcomes[g * config.trials].cost;
    double sum = 0.0;
    for (std::size_t t = 0; t < config.trials; ++t) {
      const auto& o = outcomes[g * config.trials + t];
      ++hist.counts[o.cardinality];
      hist.best_cost = std::min(hist.best_cost, o.cost);
      sum += o.cost;
    }
    hist.mean_cost = sum / static_cast<double>(config.trials);
    h.groups.push_back(std::move(hist));
  }
  std::sort(h.groups.begin(), h.groups.end(),
            [](const AlphaHistogram& l, const AlphaHistogram& r) { return l.alpha < r.alpha; });
  return h;
}

void write_histograms(const HistogramSet& h, std::ostream& out) {
  out << "alpha,cardinality,count,best_cost,mean_cost\n";
  for (const auto& g : h.groups) {
    const std::string alpha = format_double(g.alpha);
    const std::string best = format_double(g.best_cost);
    const std::string mean = format_double(g.mean_cost);
    for (std::size_t k = 0; k < g.counts.size(); ++k)
      out << alpha << ',' << k << ',' << g.counts[k] << ',' << best << ',' << mean << '\n';
  }
}

void write_histograms(const HistogramSet& h, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot open '" + path.string() + "' for writing");
  write_histograms(h, out);
  if (!out) throw ValidationError("failed writing '" + path.string() + "'");
}

}  // namespace cardqubo
