#include "warmcb/linear.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "warmcb/error.hpp"
#include "warmcb/rng.hpp"

namespace warmcb {

LinearCostRegressor::LinearCostRegressor(std::size_t num_actions, std::size_t dimension, double learning_rate)
    : num_actions_(num_actions),
      dimension_(dimension),
      learning_rate_(learning_rate),
      weights_(num_actions * (dimension + 1), 0.0) {
  require(num_actions >= 2, Errc::invalid_argument, "regressor needs at least 2 actions");
  require(std::isfinite(learning_rate) && learning_rate > 0.0, Errc::invalid_argument,
          "learning rate must be positive");
}

std::span<const double> LinearCostRegressor::weights(Action a) const {
  require(a < num_actions_, Errc::invalid_argument, "action out of range");
  return std::span<const double>(weights_).subspan(a * (dimension_ + 1), dimension_ + 1);
}

std::span<double> LinearCostRegressor::mutable_weights(Action a) {
  require(a < num_actions_, Errc::invalid_argument, "action out of range");
  return std::span<double>(weights_).subspan(a * (dimension_ + 1), dimension_ + 1);
}

double LinearCostRegressor::predict_cost(const Context& x, Action a) const {
  require(x.dimension() == dimension_, Errc::dimension_mismatch,
          "context dimension " + std::to_string(x.dimension()) + " != " + std::to_string(dimension_));
  const double* w = &weights_[a * (dimension_ + 1)];
  double s = w[dimension_];
  for (std::size_t j = 0; j < dimension_; ++j) s += w[j] * x.features[j];
  return s;
}

std::vector<double> LinearCostRegressor::predict_costs(const Context& x) const {
  std::vector<double> out(num_actions_);
  for (Action a = 0; a < num_actions_; ++a) out[a] = predict_cost(x, a);
  return out;
}

Action LinearCostRegressor::induced_action(const Context& x) const {
  Action best = 0;
  double best_value = predict_cost(x, 0);
  for (Action a = 1; a < num_actions_; ++a) {
    const double v = predict_cost(x, a);
    if (v < best_value) {
      best = a;
      best_value = v;
    }
  }
  return best;
}

void LinearCostRegressor::step(const Context& x, Action a, double target, double weight) {
  if (weight == 0.0) return;
  const double residual = predict_cost(x, a) - target;
  double norm2 = 1.0;
  for (double v : x.features) norm2 += v * v;
  // A plain step multiplies the residual by (1 - eta). Large importance weights push
  // eta past 1 and the iterates diverge, so the step is capped at the exact fit.
  const double eta = 2.0 * learning_rate_ * weight * norm2;
  const double scale = eta > 1.0 ? residual / norm2 : 2.0 * learning_rate_ * weight * residual;
  double* w = &weights_[a * (dimension_ + 1)];
  for (std::size_t j = 0; j < dimension_; ++j) w[j] -= scale * x.features[j];
  w[dimension_] -= scale;
}

void LinearCostRegressor::update_supervised(const SupervisedExample& example, double weight) {
  require(weight >= 0.0, Errc::invalid_argument, "update weight must be nonnegative");
  require(example.costs.size() == num_actions_, Errc::invalid_argument, "cost vector length != K");
  for (Action a = 0; a < num_actions_; ++a) step(example.context, a, example.costs[a], weight);
}

void LinearCostRegressor::update_bandit(const BanditObservation& obs, double weight) {
  require(weight >= 0.0, Errc::invalid_argument, "update weight must be nonnegative");
  require(obs.propensity > 0.0 && obs.propensity <= 1.0, Errc::invalid_propensity, "propensity outside (0, 1]");
  require(obs.action < num_actions_, Errc::invalid_argument, "action out of range");
  step(obs.context, obs.action, obs.observed_cost, weight / obs.propensity);
}

double weighted_objective(const LinearCostRegressor& reg, std::span<const SupervisedExample> sup_set,
                          std::span<const BanditRecord> bandit_log, double lambda) {
  double sup = 0.0;
  for (const auto& ex : sup_set) {
    for (Action a = 0; a < reg.num_actions(); ++a) {
      const double r = reg.predict_cost(ex.context, a) - ex.costs[a];
      sup += r * r;
    }
  }
  double bandit = 0.0;
  for (const auto& rec : bandit_log) {
    const auto& obs = rec.observation;
    const double r = reg.predict_cost(obs.context, obs.action) - obs.observed_cost;
    bandit += r * r / obs.propensity;
  }
  return (1.0 - lambda) * sup + lambda * bandit;
}

LinearCostRegressor train_weighted(std::span<const SupervisedExample> sup_set,
                                   std::span<const BanditRecord> bandit_log, double lambda,
                                   std::size_t num_actions, std::size_t dimension, const TrainOptions& options) {
  require(lambda >= 0.0 && lambda <= 1.0, Errc::invalid_argument, "lambda outside [0, 1]");
  return train_weighted(sup_set, bandit_log, SourceWeights::from_lambda(lambda), num_actions, dimension, options);
}

LinearCostRegressor train_weighted(std::span<const SupervisedExample> sup_set,
                                   std::span<const BanditRecord> bandit_log, SourceWeights weights,
                                   std::size_t num_actions, std::size_t dimension, const TrainOptions& options) {
  require(options.passes >= 1, Errc::invalid_argument, "passes must be at least 1");
  require(!sup_set.empty() || !bandit_log.empty(), Errc::empty_dataset, "nothing to train on");
  require(weights.supervised >= 0.0 && weights.bandit >= 0.0, Errc::invalid_argument,
          "source weights must be nonnegative");
  LinearCostRegressor reg(num_actions, dimension, options.learning_rate);

  // Index i < sup count refers to a supervised record, the rest to bandit records.
  std::vector<std::size_t> order;
  if (weights.supervised > 0.0) {
    for (std::size_t i = 0; i < sup_set.size(); ++i) order.push_back(i);
  }
  if (weights.bandit > 0.0) {
    for (std::size_t i = 0; i < bandit_log.size(); ++i) order.push_back(sup_set.size() + i);
  }
  if (order.empty()) return reg;

  Rng rng(options.seed);
  for (std::size_t pass = 0; pass < options.passes; ++pass) {
    rng.shuffle(order);
    for (std::size_t i : order) {
      if (i < sup_set.size()) {
        reg.update_supervised(sup_set[i], weights.supervised);
      } else {
        reg.update_bandit(bandit_log[i - sup_set.size()].observation, weights.bandit);
      }
    }
  }
  return reg;
}

WeightedLeastSquares::WeightedLeastSquares(std::size_t num_actions, std::size_t dimension, double ridge)
    : num_actions_(num_actions),
      dimension_(dimension),
      gram_(num_actions, std::vector<double>((dimension + 1) * (dimension + 1), 0.0)),
      rhs_(num_actions, std::vector<double>(dimension + 1, 0.0)),
      solution_(num_actions, std::vector<double>(dimension + 1, 0.0)),
      stale_(num_actions, false) {
  require(num_actions >= 2, Errc::invalid_argument, "regressor needs at least 2 actions");
  require(std::isfinite(ridge) && ridge > 0.0, Errc::invalid_argument, "ridge must be positive");
  const std::size_t m = dimension + 1;
  for (auto& g : gram_) {
    for (std::size_t i = 0; i < m; ++i) g[i * m + i] = ridge;
  }
}

void WeightedLeastSquares::add(const Context& x, Action a, double target, double weight) {
  require(x.dimension() == dimension_, Errc::dimension_mismatch,
          "context dimension " + std::to_string(x.dimension()) + " != " + std::to_string(dimension_));
  if (weight == 0.0) return;
  const std::size_t m = dimension_ + 1;
  auto z = [&](std::size_t i) { return i < dimension_ ? x.features[i] : 1.0; };
  auto& g = gram_[a];
  auto& r = rhs_[a];
  for (std::size_t i = 0; i < m; ++i) {
    const double wz = weight * z(i);
    r[i] += wz * target;
    for (std::size_t j = 0; j < m; ++j) g[i * m + j] += wz * z(j);
  }
  stale_[a] = true;
}

void WeightedLeastSquares::add_supervised(const SupervisedExample& example, double weight) {
  require(weight >= 0.0, Errc::invalid_argument, "update weight must be nonnegative");
  require(example.costs.size() == num_actions_, Errc::invalid_argument, "cost vector length != K");
  for (Action a = 0; a < num_actions_; ++a) add(example.context, a, example.costs[a], weight);
}

void WeightedLeastSquares::add_bandit(const BanditObservation& obs, double weight) {
  require(weight >= 0.0, Errc::invalid_argument, "update weight must be nonnegative");
  require(obs.propensity > 0.0 && obs.propensity <= 1.0, Errc::invalid_propensity, "propensity outside (0, 1]");
  require(obs.action < num_actions_, Errc::invalid_argument, "action out of range");
  add(obs.context, obs.action, obs.observed_cost, weight / obs.propensity);
}

void WeightedLeastSquares::solve(Action a) const {
  // Cholesky factorization; the ridge keeps the system positive definite.
  const std::size_t m = dimension_ + 1;
  const auto& g = gram_[a];
  std::vector<double> l(m * m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double s = g[i * m + j];
      for (std::size_t q = 0; q < j; ++q) s -= l[i * m + q] * l[j * m + q];
      l[i * m + j] = i == j ? std::sqrt(s) : s / l[j * m + j];
    }
  }
  std::vector<double> y(m);
  for (std::size_t i = 0; i < m; ++i) {
    double s = rhs_[a][i];
    for (std::size_t q = 0; q < i; ++q) s -= l[i * m + q] * y[q];
    y[i] = s / l[i * m + i];
  }
  auto& v = solution_[a];
  for (std::size_t i = m; i-- > 0;) {
    double s = y[i];
    for (std::size_t q = i + 1; q < m; ++q) s -= l[q * m + i] * v[q];
    v[i] = s / l[i * m + i];
  }
  stale_[a] = false;
}

Action WeightedLeastSquares::induced_action(const Context& x) const {
  require(x.dimension() == dimension_, Errc::dimension_mismatch,
          "context dimension " + std::to_string(x.dimension()) + " != " + std::to_string(dimension_));
  Action best = 0;
  double best_value = 0.0;
  for (Action a = 0; a < num_actions_; ++a) {
    if (stale_[a]) solve(a);
    const auto& v = solution_[a];
    double s = v[dimension_];
    for (std::size_t j = 0; j < dimension_; ++j) s += v[j] * x.features[j];
    if (a == 0 || s < best_value) {
      best = a;
      best_value = s;
    }
  }
  return best;
}

LinearCostRegressor WeightedLeastSquares::regressor() const {
  LinearCostRegressor reg(num_actions_, dimension_);
  for (Action a = 0; a < num_actions_; ++a) {
    if (stale_[a]) solve(a);
    auto w = reg.mutable_weights(a);
    std::copy(solution_[a].begin(), solution_[a].end(), w.begin());
  }
  return reg;
}

LinearCostRegressor solve_weighted(std::span<const SupervisedExample> sup_set, std::span<const BanditRecord> bandit_log,
                                   SourceWeights weights, std::size_t num_actions, std::size_t dimension,
                                   double ridge) {
  WeightedLeastSquares ls(num_actions, dimension, ridge);
  for (const auto& ex : sup_set) ls.add_supervised(ex, weights.supervised);
  for (const auto& rec : bandit_log) ls.add_bandit(rec.observation, weights.bandit);
  return ls.regressor();
}

}  // namespace warmcb
