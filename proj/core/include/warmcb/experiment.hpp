#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "warmcb/arrow.hpp"
#include "warmcb/datasets.hpp"
#include "warmcb/eval.hpp"
#include "warmcb/learner.hpp"
#include "warmcb/noise.hpp"

namespace warmcb {

enum class Algorithm {
  bandit_only,
  sup_only,
  majority,
  sim_bandit,
  arrow,
  arrow_2,
  supgt,
};

std::string_view to_string(Algorithm algorithm) noexcept;
Algorithm parse_algorithm(std::string_view name);
std::vector<Algorithm> all_algorithms();
// The six algorithms compared in the benchmark protocol (everything except supgt).
std::vector<Algorithm> benchmark_algorithms();

enum class LearningRateMode {
  fixed,
  grid,
};

struct LearnerSettings {
  LinearSolver solver = LinearSolver::gradient;
  double ridge = 1e-3;
  double learning_rate = 0.1;
  LearningRateMode lr_mode = LearningRateMode::fixed;
  std::size_t warm_passes = 1;
  bool full_retrain = false;
  std::size_t retrain_passes = 1;
  ExplorationBase base = ExplorationBase::last_policy;
};

// One fully resolved experimental condition.
struct Condition {
  std::size_t ns = 0;
  std::size_t nb = 0;
  NoiseModel noise;
  double epsilon = 0.0125;
  std::size_t seed_index = 0;
};

struct PreparedDataset {
  MulticlassDataset data;
  double skyline = 0.0;
  std::size_t majority = 0;
};

PreparedDataset prepare_dataset(MulticlassDataset data, const SkylineOptions& skyline = {});

struct CellInputs {
  std::vector<SupervisedExample> warm;
  std::vector<InteractionRound> stream;
  std::vector<std::size_t> labels;
  std::uint64_t action_seed = 0;
};

// Split, corrupt and seed one (dataset, ns, nb, noise, seed) cell. Every algorithm
// and epsilon in the cell sees the same inputs and the same action seed.
CellInputs prepare_cell(const PreparedDataset& dataset, const Condition& condition, std::uint64_t base_seed);

// Average interaction cost of one algorithm on a prepared cell.
double run_algorithm(Algorithm algorithm, const CellInputs& cell, std::size_t num_actions, std::size_t dimension,
                     double epsilon, const LearnerSettings& settings);

struct SweepConfig {
  std::vector<double> ns_fractions = {0.005, 0.01, 0.02, 0.04};
  std::vector<double> nb_fractions = {0.92, 0.46, 0.23, 0.115};
  std::vector<NoiseModel> noise = default_noise_grid();
  std::vector<Algorithm> algorithms = benchmark_algorithms();
  std::vector<double> epsilons = {0.0125};
  std::size_t num_seeds = 1;
  std::uint64_t base_seed = 0;
  std::size_t warm_floor = kDefaultWarmStartFloor;
  LearnerSettings learner;
  std::size_t threads = 0;
};

// Records for one condition and every configured algorithm, unnormalized.
std::vector<ResultRecord> run_condition(const PreparedDataset& dataset, const Condition& condition,
                                        const SweepConfig& config);

// Full grid, run in parallel over cells; normalized and canonically sorted.
std::vector<ResultRecord> run_sweep(std::span<const PreparedDataset> datasets, const SweepConfig& config);

}  // namespace warmcb
