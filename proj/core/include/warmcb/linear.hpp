#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "warmcb/types.hpp"

namespace warmcb {

// One linear cost model per action over (features, 1). The induced policy picks the
// action with the smallest predicted cost.
class LinearCostRegressor {
 public:
  LinearCostRegressor(std::size_t num_actions, std::size_t dimension, double learning_rate = 0.1);

  std::size_t num_actions() const noexcept { return num_actions_; }
  std::size_t dimension() const noexcept { return dimension_; }
  double learning_rate() const noexcept { return learning_rate_; }

  // Row a holds d feature weights followed by the bias weight.
  std::span<const double> weights(Action a) const;
  std::span<double> mutable_weights(Action a);

  std::vector<double> predict_costs(const Context& x) const;
  double predict_cost(const Context& x, Action a) const;
  Action induced_action(const Context& x) const;

  // One gradient step per action on weight * (f(x, a) - c(a))^2.
  void update_supervised(const SupervisedExample& example, double weight);

  // One gradient step on (weight / propensity) * (f(x, a_t) - c_t(a_t))^2.
  void update_bandit(const BanditObservation& obs, double weight);

  friend bool operator==(const LinearCostRegressor&, const LinearCostRegressor&) = default;

 private:
  void step(const Context& x, Action a, double target, double weight);

  std::size_t num_actions_;
  std::size_t dimension_;
  double learning_rate_;
  std::vector<double> weights_;
};

// Value of (1 - lambda) * sum_S sum_a (f - c)^2 + lambda * sum_log (1/p) (f - c)^2.
double weighted_objective(const LinearCostRegressor& reg, std::span<const SupervisedExample> sup_set,
                          std::span<const BanditRecord> bandit_log, double lambda);

struct TrainOptions {
  std::size_t passes = 1;
  double learning_rate = 0.1;
  std::uint64_t seed = 0;
};

// Fresh regressor trained by shuffled passes over the union of both sources. A source
// whose weight is zero contributes no updates and no shuffle positions.
LinearCostRegressor train_weighted(std::span<const SupervisedExample> sup_set,
                                   std::span<const BanditRecord> bandit_log, double lambda,
                                   std::size_t num_actions, std::size_t dimension, const TrainOptions& options);

// Per-source multiplier version used by averaged objectives.
LinearCostRegressor train_weighted(std::span<const SupervisedExample> sup_set,
                                   std::span<const BanditRecord> bandit_log, SourceWeights weights,
                                   std::size_t num_actions, std::size_t dimension, const TrainOptions& options);

// Exact minimizer of the same weighted squared loss, kept as per-action normal
// equations (sum w z z^T + ridge I) v = sum w c z over z = (features, 1).
class WeightedLeastSquares {
 public:
  WeightedLeastSquares(std::size_t num_actions, std::size_t dimension, double ridge = 1e-3);

  void add_supervised(const SupervisedExample& example, double weight);
  void add_bandit(const BanditObservation& obs, double weight);

  Action induced_action(const Context& x) const;

  // Solved weights packed into a regressor (its learning rate is unused).
  LinearCostRegressor regressor() const;

 private:
  void add(const Context& x, Action a, double target, double weight);
  void solve(Action a) const;

  std::size_t num_actions_;
  std::size_t dimension_;
  std::vector<std::vector<double>> gram_;
  std::vector<std::vector<double>> rhs_;
  mutable std::vector<std::vector<double>> solution_;
  mutable std::vector<bool> stale_;
};

LinearCostRegressor solve_weighted(std::span<const SupervisedExample> sup_set, std::span<const BanditRecord> bandit_log,
                                   SourceWeights weights, std::size_t num_actions, std::size_t dimension,
                                   double ridge = 1e-3);

inline constexpr double kLearningRateGrid[] = {0.1, 0.03, 0.3, 0.01, 1.0, 0.003, 3.0, 0.001, 10.0};

}  // namespace warmcb
