#include "warmcb/experiment.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "warmcb/baselines.hpp"
#include "warmcb/error.hpp"
#include "warmcb/learner.hpp"
#include "warmcb/linear.hpp"
#include "warmcb/log.hpp"
#include "warmcb/rng.hpp"
#include "warmcb/supgt.hpp"

namespace warmcb {

namespace {

constexpr Algorithm kAllAlgorithms[] = {Algorithm::bandit_only, Algorithm::sup_only, Algorithm::majority,
                                        Algorithm::sim_bandit,  Algorithm::arrow,    Algorithm::arrow_2,
                                        Algorithm::supgt};

}  // namespace

std::string_view to_string(Algorithm algorithm) noexcept {
  switch (algorithm) {
    case Algorithm::bandit_only: return "bandit-only";
    case Algorithm::sup_only: return "sup-only";
    case Algorithm::majority: return "majority";
    case Algorithm::sim_bandit: return "sim-bandit";
    case Algorithm::arrow: return "arrow";
    case Algorithm::arrow_2: return "arrow-2";
    case Algorithm::supgt: return "supgt";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  std::string valid;
  for (Algorithm a : kAllAlgorithms) {
    if (name == to_string(a)) return a;
    valid += valid.empty() ? "" : ", ";
    valid += to_string(a);
  }
  fail(Errc::parse_error, "unknown algorithm '" + std::string(name) + "' (valid: " + valid + ")");
}

std::vector<Algorithm> all_algorithms() { return {std::begin(kAllAlgorithms), std::end(kAllAlgorithms)}; }

std::vector<Algorithm> benchmark_algorithms() {
  return {Algorithm::bandit_only, Algorithm::sup_only, Algorithm::majority,
          Algorithm::sim_bandit,  Algorithm::arrow,    Algorithm::arrow_2};
}

PreparedDataset prepare_dataset(MulticlassDataset data, const SkylineOptions& skyline) {
  PreparedDataset out;
  out.skyline = skyline_error(data, skyline);
  out.majority = majority_label(data.labels, data.num_actions);
  out.data = std::move(data);
  return out;
}

CellInputs prepare_cell(const PreparedDataset& dataset, const Condition& condition, std::uint64_t base_seed) {
  const std::string split_key = dataset.data.name + "|ns=" + std::to_string(condition.ns) +
                                "|nb=" + std::to_string(condition.nb) + "|seed=" + std::to_string(condition.seed_index);
  const std::uint64_t split_seed = derive_seed(base_seed, "split|" + split_key);
  const std::uint64_t cell_seed = derive_seed(base_seed, "cell|" + split_key + "|noise=" + to_string(condition.noise));
  const DatasetSplit parts = split(dataset.data, {condition.ns, condition.nb, split_seed});

  CellInputs cell;
  cell.warm = make_warm_start(dataset.data, parts.warm, condition.noise, dataset.majority,
                              derive_seed(cell_seed, "noise"));
  cell.stream = make_interaction(dataset.data, parts.interaction);
  for (std::size_t i : parts.warm) cell.labels.push_back(dataset.data.labels[i]);
  for (std::size_t i : parts.interaction) cell.labels.push_back(dataset.data.labels[i]);
  cell.action_seed = derive_seed(cell_seed, "play");
  return cell;
}

namespace {

double run_once(Algorithm algorithm, const CellInputs& cell, std::size_t k, std::size_t d, double epsilon,
                const LearnerSettings& settings, double learning_rate) {
  const LinearLearnerOptions opts{settings.solver,       learning_rate,         settings.ridge,
                                  settings.warm_passes, settings.full_retrain, settings.retrain_passes};
  const LearnerFactory factory = linear_learner_factory(k, d, opts);
  const std::uint64_t seed = cell.action_seed;
  switch (algorithm) {
    case Algorithm::bandit_only: return average_cost(run_bandit_only(cell.stream, {epsilon, seed}, factory));
    case Algorithm::sup_only: return average_cost(run_sup_only(cell.warm, cell.stream, factory, seed));
    case Algorithm::majority: return average_cost(run_majority(cell.labels, cell.stream));
    case Algorithm::sim_bandit: return average_cost(run_sim_bandit(cell.warm, cell.stream, {epsilon, seed}, factory));
    case Algorithm::arrow:
    case Algorithm::arrow_2: {
      const LambdaGrid grid = default_lambda_grid(epsilon, k, algorithm == Algorithm::arrow ? 8 : 2);
      return average_cost(run_arrow(cell.warm, cell.stream, grid, {epsilon, settings.base, seed}, factory).trajectory);
    }
    case Algorithm::supgt: {
      const LambdaGrid grid = default_lambda_grid(epsilon, k, 8);
      const EpochTrainer trainer = linear_epoch_trainer(k, d, opts);
      return average_cost(run_supgt(cell.warm, cell.stream, grid, {epsilon, seed}, trainer).trajectory);
    }
  }
  fail(Errc::invalid_argument, "unhandled algorithm");
}

}  // namespace

double run_algorithm(Algorithm algorithm, const CellInputs& cell, std::size_t num_actions, std::size_t dimension,
                     double epsilon, const LearnerSettings& settings) {
  if (settings.lr_mode == LearningRateMode::fixed || settings.solver == LinearSolver::exact ||
      algorithm == Algorithm::majority) {
    return run_once(algorithm, cell, num_actions, dimension, epsilon, settings, settings.learning_rate);
  }
  double best = std::numeric_limits<double>::infinity();
  for (double lr : kLearningRateGrid) {
    best = std::min(best, run_once(algorithm, cell, num_actions, dimension, epsilon, settings, lr));
  }
  return best;
}

std::vector<ResultRecord> run_condition(const PreparedDataset& dataset, const Condition& condition,
                                        const SweepConfig& config) {
  std::vector<ResultRecord> out;
  auto base_record = [&](Algorithm a) {
    ResultRecord r;
    r.dataset = dataset.data.name;
    r.ns = condition.ns;
    r.nb = condition.nb;
    r.ratio = condition.ns == 0 ? std::numeric_limits<double>::infinity()
                                : static_cast<double>(condition.nb) / static_cast<double>(condition.ns);
    r.noise_kind = std::string(to_string(condition.noise.kind));
    r.noise_p = condition.noise.p;
    r.algorithm = std::string(to_string(a));
    r.epsilon = condition.epsilon;
    r.seed = condition.seed_index;
    r.skyline = dataset.skyline;
    return r;
  };

  if (condition.ns < config.warm_floor) {
    for (Algorithm a : config.algorithms) {
      ResultRecord r = base_record(a);
      r.status = RecordStatus::skipped;
      out.push_back(std::move(r));
    }
    return out;
  }

  CellInputs cell;
  std::string cell_error;
  try {
    cell = prepare_cell(dataset, condition, config.base_seed);
  } catch (const Error& e) {
    cell_error = e.what();
  }
  for (Algorithm a : config.algorithms) {
    ResultRecord r = base_record(a);
    try {
      if (!cell_error.empty()) fail(Errc::invalid_argument, cell_error);
      r.avg_cost = run_algorithm(a, cell, dataset.data.num_actions, dataset.data.dimension, condition.epsilon,
                                 config.learner);
    } catch (const Error& e) {
      r.status = RecordStatus::error;
      log_warning(dataset.data.name + " " + r.algorithm + ": " + e.what());
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<ResultRecord> run_sweep(std::span<const PreparedDataset> datasets, const SweepConfig& config) {
  require(!config.algorithms.empty(), Errc::invalid_argument, "no algorithms selected");
  require(!config.epsilons.empty(), Errc::invalid_argument, "no epsilon values");
  require(config.num_seeds >= 1, Errc::invalid_argument, "need at least one seed");

  struct Job {
    const PreparedDataset* dataset;
    Condition condition;
  };
  std::vector<Job> jobs;
  for (const auto& ds : datasets) {
    const std::size_t n = ds.data.size();
    for (double fs : config.ns_fractions) {
      for (double fb : config.nb_fractions) {
        for (const auto& noise : config.noise) {
          for (double eps : config.epsilons) {
            for (std::size_t s = 0; s < config.num_seeds; ++s) {
              jobs.push_back({&ds, {count_from_fraction(n, fs), count_from_fraction(n, fb), noise, eps, s}});
            }
          }
        }
      }
    }
  }

  std::vector<std::vector<ResultRecord>> slots(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        slots[i] = run_condition(*jobs[i].dataset, jobs[i].condition, config);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::size_t threads = config.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : config.threads;
  threads = std::min(threads, std::max<std::size_t>(jobs.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::vector<ResultRecord> records;
  for (auto& s : slots) {
    for (auto& r : s) records.push_back(std::move(r));
  }
  normalize_records(records);
  sort_records(records);
  return records;
}

}  // namespace warmcb
