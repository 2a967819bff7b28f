#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "warmcb/learner.hpp"
#include "warmcb/rng.hpp"
#include "warmcb/trajectory.hpp"
#include "warmcb/types.hpp"

namespace warmcb {

// Sorted, duplicate-free lambda values in [0, 1].
class LambdaGrid {
 public:
  explicit LambdaGrid(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

 private:
  std::vector<double> values_;
};

// size 8: {0, z/8, z/4, z/2, z, 1/2 + z/2, 3/4 + z/4, 1} with z = eps / (K + eps); size 2: {0, 1}.
LambdaGrid default_lambda_grid(double epsilon, std::size_t num_actions, std::size_t size = 8);

enum class ExplorationBase {
  last_policy,
  averaged,
};

struct ArrowConfig {
  double epsilon = 0.0125;
  ExplorationBase base = ExplorationBase::last_policy;
  std::uint64_t seed = 0;
};

using CostOracle = std::function<double(Action)>;

class ArrowState {
 public:
  ArrowState(std::span<const SupervisedExample> warm_start, LambdaGrid grid, std::size_t num_actions,
             const ArrowConfig& config, const LearnerFactory& factory);

  // Plays round t = round() + 1 and updates every lambda learner.
  RoundRecord step(const Context& x, const CostOracle& cost_oracle, Rng& rng);

  std::size_t round() const noexcept { return round_; }
  const LambdaGrid& grid() const noexcept { return grid_; }
  double current_lambda() const noexcept { return grid_[current_]; }
  std::size_t current_lambda_index() const noexcept { return current_; }

  // Progressive-validation sums, one per grid value.
  std::span<const double> validation_sums() const noexcept { return sums_; }
  const std::vector<BanditRecord>& log() const noexcept { return log_; }
  const PolicyLearner& learner(std::size_t lambda_index) const { return *learners_.at(lambda_index); }

 private:
  ActionDistribution base_distribution(const Context& x) const;

  LambdaGrid grid_;
  std::size_t num_actions_;
  ArrowConfig config_;
  std::vector<std::unique_ptr<PolicyLearner>> learners_;
  // Averaged mode only: history[i][tau] is the policy used at round tau + 1.
  std::vector<std::vector<Policy>> history_;
  std::vector<double> sums_;
  std::vector<BanditRecord> log_;
  std::size_t current_ = 0;
  std::size_t round_ = 0;
};

struct ArrowResult {
  Trajectory trajectory;
  std::vector<double> validation_sums;
  double final_lambda = 0.0;
};

ArrowResult run_arrow(std::span<const SupervisedExample> warm_start, std::span<const InteractionRound> stream,
                      const LambdaGrid& grid, const ArrowConfig& config, const LearnerFactory& factory);

}  // namespace warmcb
