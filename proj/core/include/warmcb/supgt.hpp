#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "warmcb/arrow.hpp"
#include "warmcb/learner.hpp"
#include "warmcb/linear.hpp"
#include "warmcb/tabular.hpp"
#include "warmcb/trajectory.hpp"

namespace warmcb {

struct EpochSchedule {
  std::size_t num_epochs = 0;
  // boundaries[e] = min(2^e, nb) for e >= 1, boundaries[0] = 0.
  std::vector<std::size_t> boundaries;
};

EpochSchedule epoch_schedule(std::size_t nb);

struct SupervisedPartition {
  std::vector<SupervisedExample> train;
  // validation[e - 1] is consulted only at the end of epoch e.
  std::vector<std::vector<SupervisedExample>> validation;
};

// E + 1 in-order parts of floor(|S| / (E + 1)) examples each; the remainder is dropped.
SupervisedPartition partition_supervised(std::span<const SupervisedExample> data, std::size_t num_epochs);

struct TrainedPolicy {
  Policy policy;
  std::optional<std::size_t> index;
};

// Minimizes lambda * mean IPS cost over the log + (1 - lambda) * mean supervised cost
// over the training part.
using EpochTrainer = std::function<TrainedPolicy(std::span<const BanditRecord> log,
                                                 std::span<const SupervisedExample> train, double lambda,
                                                 std::uint64_t seed)>;

EpochTrainer tabular_epoch_trainer(std::shared_ptr<const TabularPolicyClass> policy_class);

// Per-source means become per-record weights lambda * N / t and (1 - lambda) * N / n
// with N = t + n, keeping the average step size comparable to an unweighted pass.
// Gradient training uses options.retrain_passes passes.
EpochTrainer linear_epoch_trainer(std::size_t num_actions, std::size_t dimension,
                                  const LinearLearnerOptions& options);

struct SupGtConfig {
  double epsilon = 0.0125;
  std::uint64_t seed = 0;
};

struct EpochRecord {
  std::size_t epoch = 0;
  double lambda = 0.0;
  std::optional<std::size_t> policy_index;
  Policy policy;
};

struct SupGtResult {
  Trajectory trajectory;
  std::vector<EpochRecord> epochs;
};

SupGtResult run_supgt(std::span<const SupervisedExample> supervised, std::span<const InteractionRound> stream,
                      const LambdaGrid& grid, const SupGtConfig& config, const EpochTrainer& trainer);

}  // namespace warmcb
