// Command-line front end: cardinality-sweep experiments, single solves,
// exhaustive oracles and instance generation.
//
// Exit codes: 0 success, 2 invalid input, 3 capacity guard tripped.

#include <charconv>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cardqubo/experiment.hpp"
#include "cardqubo/instances.hpp"
#include "cardqubo/penalty.hpp"
#include "cardqubo/solvers.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitCapacity = 3;

std::vector<double> parse_alphas(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string tok = text.substr(pos, comma - pos);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw cardqubo::ValidationError("cannot parse alpha '" + tok + "'");
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

struct InstanceOptions {
  std::string instance = "gaussian";
  std::size_t n = 30;
  std::uint64_t seed = 1;
  bool symmetrize = false;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--instance", instance, "gaussian, psd or file:PATH")->capture_default_str();
    cmd->add_option("--n", n, "Problem size (generated instances)")->capture_default_str();
    cmd->add_option("--seed", seed, "Seed for instance generation")->capture_default_str();
    cmd->add_flag("--symmetrize", symmetrize, "Replace a file matrix A by (A + A^T)/2");
  }

  cardqubo::InstanceSource source() const {
    auto s = cardqubo::InstanceSource::parse(instance);
    s.symmetrize = symmetrize;
    return s;
  }

  cardqubo::SymmetricMatrix build() const {
    const auto s = source();
    return cardqubo::make_instance(s, s.kind == cardqubo::InstanceSource::Kind::kFile ? 0 : n, seed);
  }
};

void print_result(const cardqubo::SolveResult& r) {
  std::cout.precision(17);
  std::cout << "cost: " << r.cost << '\n'
            << "solution: " << r.solution.to_string() << '\n'
            << "cardinality: " << r.solution.cardinality() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cardinality-constrained QUBO toolkit"};
  app.require_subcommand(1);

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Alpha sweep of annealing trials tallied by cardinality");
  InstanceOptions exp_inst;
  exp_inst.add_to(experiment);
  std::size_t exp_m = 8;
  std::string exp_alphas = "0,0.1,0.2,0.5,1,2,10";
  std::size_t exp_trials = 500;
  std::string exp_schedule = "fast";
  std::size_t exp_threads = 0;
  std::string exp_out;
  experiment->add_option("--m", exp_m, "Target cardinality")->capture_default_str();
  experiment->add_option("--alphas", exp_alphas, "Comma-separated penalty weights (0 = unconstrained)")
      ->capture_default_str();
  experiment->add_option("--trials", exp_trials, "Anneals per alpha")->capture_default_str();
  experiment->add_option("--schedule", exp_schedule, "fast or quality")->capture_default_str();
  experiment->add_option("--threads", exp_threads, "Worker threads (0 = all cores)");
  experiment->add_option("--out", exp_out, "CSV output path")->required();

  // solve
  auto* solve = app.add_subcommand("solve", "Anneal one matrix once");
  InstanceOptions solve_inst;
  solve_inst.add_to(solve);
  double solve_alpha = 0.0;
  std::optional<std::size_t> solve_m;
  std::string solve_schedule = "quality";
  std::uint64_t solve_anneal_seed = 0;
  solve->add_option("--alpha", solve_alpha, "Penalty weight (0 = unconstrained)")->capture_default_str();
  solve->add_option("--m", solve_m, "Target cardinality (required when alpha > 0)");
  solve->add_option("--schedule", solve_schedule, "fast or quality")->capture_default_str();
  solve->add_option("--anneal-seed", solve_anneal_seed, "Seed for the annealer")->capture_default_str();

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exhaustive minimum (n <= 30)");
  InstanceOptions oracle_inst;
  oracle_inst.add_to(oracle);
  std::optional<std::size_t> oracle_m;
  oracle->add_option("--m", oracle_m, "Restrict the search to vectors with exactly m ones");

  // gen
  auto* gen = app.add_subcommand("gen", "Write a generated instance in matrix text format");
  std::string gen_instance = "gaussian";
  std::size_t gen_n = 30;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  gen->add_option("--instance", gen_instance, "gaussian or psd")->capture_default_str();
  gen->add_option("--n", gen_n, "Problem size")->capture_default_str();
  gen->add_option("--seed", gen_seed, "Generator seed")->capture_default_str();
  gen->add_option("--out", gen_out, "Output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (experiment->parsed()) {
      cardqubo::ExperimentConfig config;
      config.n = exp_inst.n;
      config.m_target = exp_m;
      config.alphas = parse_alphas(exp_alphas);
      config.trials = exp_trials;
      config.instance = exp_inst.source();
      config.seed = exp_inst.seed;
      config.schedule = exp_schedule;
      config.threads = exp_threads;
      if (config.instance.kind == cardqubo::InstanceSource::Kind::kFile) config.n = 0;
      const auto a = cardqubo::make_instance(config.instance, config.n, config.seed);
      config.n = a.size();
      const auto h = cardqubo::run_experiment(config, a);
      cardqubo::write_histograms(h, exp_out);
      for (const auto& g : h.groups)
        std::cout << "alpha=" << g.alpha << " mode=" << g.mode() << " at_m=" << g.counts[exp_m]
                  << '/' << h.trials << " mean_k=" << g.mean_cardinality() << '\n';
    } else if (solve->parsed()) {
      auto a = solve_inst.build();
      if (solve_alpha != 0.0) {
        if (!solve_m) throw cardqubo::ValidationError("--m is required when --alpha is nonzero");
        a = cardqubo::apply_constraint(a, cardqubo::PenaltySpec(a.size(), *solve_m, solve_alpha));
      }
      print_result(cardqubo::simulated_anneal(a, cardqubo::AnnealSchedule::from_name(solve_schedule),
                                              solve_anneal_seed));
    } else if (oracle->parsed()) {
      const auto a = oracle_inst.build();
      print_result(oracle_m ? cardqubo::brute_force_cardinality(a, *oracle_m) : cardqubo::brute_force(a));
    } else if (gen->parsed()) {
      const auto source = cardqubo::InstanceSource::parse(gen_instance);
      if (source.kind == cardqubo::InstanceSource::Kind::kFile)
        throw cardqubo::ValidationError("gen only writes gaussian or psd instances");
      cardqubo::save_matrix(cardqubo::make_instance(source, gen_n, gen_seed), gen_out);
    }
  } catch (const cardqubo::CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const cardqubo::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return 0;
}
