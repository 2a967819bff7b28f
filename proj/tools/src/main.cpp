#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "warmcb/arrow.hpp"
#include "warmcb/error.hpp"
#include "warmcb_cli/commands.hpp"
#include "warmcb_cli/config.hpp"

namespace {

using warmcb::cli::KeyValueConfig;

struct ConfigArgs {
  std::string config_path;
  std::vector<std::string> overrides;
};

void add_config_options(CLI::App* cmd, ConfigArgs& args) {
  cmd->add_option("-c,--config", args.config_path, "key = value config file")->check(CLI::ExistingFile);
  cmd->add_option("--set", args.overrides, "override one config key, e.g. --set noise=cyc:0.25");
}

KeyValueConfig build_config(const ConfigArgs& args, const std::vector<std::pair<std::string, std::string>>& flags) {
  KeyValueConfig config;
  if (!args.config_path.empty()) config = KeyValueConfig::load(args.config_path);
  for (const auto& kv : flags) {
    if (!kv.second.empty()) config.set(kv.first, kv.second);
  }
  for (const auto& item : args.overrides) {
    config.merge(KeyValueConfig::parse(item, "--set"));
  }
  config.check_keys(warmcb::cli::sweep_keys());
  return config;
}

int report(const std::string& code, const std::string& message) {
  nlohmann::json j{{"error", code}, {"message", message}};
  std::cerr << j.dump() << '\n';
  return 1;
}

template <class F>
void with_output(const std::string& path, F&& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  warmcb::require(static_cast<bool>(out), warmcb::Errc::io_error, "cannot open " + path + " for writing");
  write(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Warm-started contextual bandit experiments"};
  app.require_subcommand(1);

  ConfigArgs run_args;
  std::string run_dataset, run_noise, run_algorithm, run_epsilon, run_ns, run_nb, run_seed, run_solver, run_output;
  auto* run = app.add_subcommand("run", "run one algorithm on one condition and print its result row");
  add_config_options(run, run_args);
  run->add_option("--dataset", run_dataset, "CSV path or synth:n=..:d=..:k=..");
  run->add_option("--ns", run_ns, "warm-start size");
  run->add_option("--nb", run_nb, "interaction rounds");
  run->add_option("--noise", run_noise, "noiseless, uar:p, cyc:p or maj:p");
  run->add_option("--algorithm", run_algorithm, "bandit-only, sup-only, majority, sim-bandit, arrow, arrow-2, supgt");
  run->add_option("--epsilon", run_epsilon, "exploration rate");
  run->add_option("--seed", run_seed, "seed index");
  run->add_option("--solver", run_solver, "gradient or exact");
  run->add_option("-o,--output", run_output, "output CSV (default stdout)");

  ConfigArgs sweep_args;
  std::string sweep_output_dir;
  auto* sweep = app.add_subcommand("sweep", "run the experiment grid and write results.csv");
  add_config_options(sweep, sweep_args);
  sweep->add_option("--output-dir", sweep_output_dir, "directory for results.csv");

  std::string cdf_input, cdf_group = "ratio", cdf_output;
  auto* cdf = app.add_subcommand("cdf", "CDF table of normalized errors for plotting");
  cdf->add_option("-i,--input", cdf_input, "results CSV")->required()->check(CLI::ExistingFile);
  cdf->add_option("--group-by", cdf_group, "ratio, noise or all");
  cdf->add_option("-o,--output", cdf_output, "output CSV (default stdout)");

  double ucb_delta = 0.4;
  std::size_t ucb_ns = 1000, ucb_nb = 1000000;
  bool ucb_shifted = false;
  auto* ucb = app.add_subcommand("ucb-demo", "two-armed UCB warm-started from a shifted source");
  ucb->add_option("--delta", ucb_delta, "cost gap");
  ucb->add_option("--ns", ucb_ns, "warm samples per arm");
  ucb->add_option("--nb", ucb_nb, "interaction rounds");
  ucb->add_flag("--shifted-log", ucb_shifted, "use ln(t + ns) in the confidence width");

  warmcb::cli::BoundsRequest bounds_req;
  std::size_t bounds_grid_size = 8;
  auto* bounds = app.add_subcommand("bounds", "evaluate the regret bound terms on a lambda grid");
  bounds->add_option("-K,--actions", bounds_req.params.num_actions, "number of actions");
  bounds->add_option("--epsilon", bounds_req.params.epsilon, "exploration rate");
  bounds->add_option("--ns", bounds_req.params.ns, "warm-start size");
  bounds->add_option("--nb", bounds_req.params.nb, "interaction rounds");
  bounds->add_option("--policies", bounds_req.params.policy_count, "policy class size");
  bounds->add_option("--delta-conf", bounds_req.params.delta_conf, "confidence parameter");
  bounds->add_option("--alpha", bounds_req.alpha, "similarity alpha");
  bounds->add_option("--delta-sim", bounds_req.delta_sim, "similarity delta");
  bounds->add_option("-t,--round", bounds_req.t, "round (or epoch) for the per-lambda terms");
  bounds->add_option("--grid", bounds_req.grid, "explicit lambda values")->delimiter(',');
  bounds->add_option("--grid-size", bounds_grid_size, "default grid size (2 or 8)");

  std::string sim_instance;
  double sim_alpha = 1.0, sim_delta = 0.0;
  auto* sim = app.add_subcommand("similarity", "check (alpha, delta) similarity on a finite instance");
  sim->add_option("-i,--instance", sim_instance, "JSON instance")->required()->check(CLI::ExistingFile);
  sim->add_option("--alpha", sim_alpha, "alpha");
  sim->add_option("--delta", sim_delta, "delta");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      const auto config = build_config(run_args, {{"datasets", run_dataset},
                                                  {"ns", run_ns},
                                                  {"nb", run_nb},
                                                  {"noise", run_noise},
                                                  {"algorithms", run_algorithm},
                                                  {"epsilons", run_epsilon},
                                                  {"seed", run_seed},
                                                  {"solver", run_solver}});
      const auto record = warmcb::cli::cmd_run(config);
      with_output(run_output, [&](std::ostream& out) { warmcb::write_results_csv({&record, 1}, out); });
    } else if (*sweep) {
      const auto config = build_config(sweep_args, {{"output_dir", sweep_output_dir}});
      warmcb::cli::cmd_sweep(config, std::cerr);
    } else if (*cdf) {
      const auto grouping = warmcb::parse_cdf_grouping(cdf_group);
      with_output(cdf_output, [&](std::ostream& out) { warmcb::cli::cmd_cdf(cdf_input, grouping, out); });
    } else if (*ucb) {
      warmcb::cli::cmd_ucb_demo(ucb_delta, ucb_ns, ucb_nb, ucb_shifted, std::cout);
    } else if (*bounds) {
      if (bounds_req.grid.empty()) {
        const auto grid = warmcb::default_lambda_grid(bounds_req.params.epsilon, bounds_req.params.num_actions,
                                                      bounds_grid_size);
        bounds_req.grid.assign(grid.values().begin(), grid.values().end());
      }
      warmcb::cli::cmd_bounds(bounds_req, std::cout);
    } else if (*sim) {
      warmcb::cli::cmd_similarity(sim_instance, sim_alpha, sim_delta, std::cout);
    }
  } catch (const warmcb::Error& e) {
    return report(std::string(warmcb::to_string(e.code())), e.what());
  } catch (const std::exception& e) {
    return report("internal", e.what());
  }
  return EXIT_SUCCESS;
}
