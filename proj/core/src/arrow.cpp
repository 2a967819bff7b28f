#include "warmcb/arrow.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "warmcb/core.hpp"
#include "warmcb/error.hpp"
#include "warmcb/log.hpp"

namespace warmcb {

LambdaGrid::LambdaGrid(std::vector<double> values) : values_(std::move(values)) {
  require(!values_.empty(), Errc::invalid_argument, "lambda grid is empty");
  for (double v : values_) {
    require(v >= 0.0 && v <= 1.0, Errc::invalid_argument, "lambda " + std::to_string(v) + " outside [0, 1]");
  }
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

LambdaGrid default_lambda_grid(double epsilon, std::size_t num_actions, std::size_t size) {
  require(epsilon > 0.0 && epsilon <= 1.0, Errc::invalid_argument, "epsilon must be in (0, 1]");
  require(num_actions >= 2, Errc::invalid_argument, "need at least 2 actions");
  if (size == 2) return LambdaGrid({0.0, 1.0});
  require(size == 8, Errc::invalid_argument, "lambda grid size must be 2 or 8");
  const double z = epsilon / (static_cast<double>(num_actions) + epsilon);
  return LambdaGrid({0.0, z / 8, z / 4, z / 2, z, 0.5 + z / 2, 0.75 + z / 4, 1.0});
}

namespace {

LambdaGrid usable_grid(LambdaGrid grid, bool have_warm_start) {
  if (have_warm_start || grid[0] != 0.0) return grid;
  log_warning("empty warm start: dropping lambda = 0 from the grid");
  std::vector<double> rest(grid.values().begin() + 1, grid.values().end());
  require(!rest.empty(), Errc::degenerate_objective, "lambda grid {0} with an empty warm start");
  return LambdaGrid(std::move(rest));
}

}  // namespace

ArrowState::ArrowState(std::span<const SupervisedExample> warm_start, LambdaGrid grid, std::size_t num_actions,
                       const ArrowConfig& config, const LearnerFactory& factory)
    : grid_(usable_grid(std::move(grid), !warm_start.empty())), num_actions_(num_actions), config_(config) {
  require(num_actions >= 2, Errc::invalid_argument, "need at least 2 actions");
  require(config.epsilon >= 0.0 && config.epsilon <= 1.0, Errc::invalid_argument, "epsilon outside [0, 1]");
  for (double lambda : grid_.values()) {
    learners_.push_back(factory(warm_start, lambda, learner_seed(config.seed, lambda)));
  }
  sums_.assign(grid_.size(), 0.0);
  if (config_.base == ExplorationBase::averaged) {
    history_.resize(grid_.size());
    for (std::size_t i = 0; i < grid_.size(); ++i) history_[i].push_back(learners_[i]->snapshot());
  }
}

ActionDistribution ArrowState::base_distribution(const Context& x) const {
  if (config_.base == ExplorationBase::last_policy) {
    return ActionDistribution::point_mass(num_actions_, learners_[current_]->act(x));
  }
  // Rounds 1..t-1 each contributed one policy; average their point masses.
  const auto& policies = history_[current_];
  const std::size_t count = round_;
  std::vector<double> probs(num_actions_, 0.0);
  for (std::size_t tau = 0; tau < count; ++tau) probs[policies[tau](x)] += 1.0;
  for (double& p : probs) p /= static_cast<double>(count);
  // Renormalize so rounding never trips the sum check.
  double total = 0.0;
  for (double p : probs) total += p;
  for (double& p : probs) p /= total;
  return ActionDistribution(std::move(probs));
}

RoundRecord ArrowState::step(const Context& x, const CostOracle& cost_oracle, Rng& rng) {
  const std::size_t t = round_ + 1;
  const ActionDistribution dist = t == 1 ? ActionDistribution::uniform(num_actions_)
                                         : epsilon_greedy_mix(base_distribution(x), config_.epsilon);
  const SampledAction sampled = sample_action(dist, rng);
  const double cost = cost_oracle(sampled.action);
  require(cost >= 0.0 && cost <= 1.0, Errc::invalid_cost, "observed cost " + std::to_string(cost) + " outside [0, 1]");

  BanditObservation obs{x, sampled.action, cost, sampled.propensity};
  IpsCostVector ips = ips_estimate(obs, num_actions_);
  BanditRecord record{std::move(obs), std::move(ips)};

  const double lambda_used = grid_[current_];
  for (std::size_t i = 0; i < learners_.size(); ++i) {
    sums_[i] += record.ips[learners_[i]->act(x)];
    learners_[i]->observe(record);
    if (!history_.empty()) history_[i].push_back(learners_[i]->snapshot());
  }
  log_.push_back(std::move(record));
  current_ = argmin_index(sums_);
  round_ = t;

  std::vector<double> probs(dist.probs().begin(), dist.probs().end());
  return {x.id.value_or(t - 1), sampled.action, cost, sampled.propensity, lambda_used, std::move(probs)};
}

ArrowResult run_arrow(std::span<const SupervisedExample> warm_start, std::span<const InteractionRound> stream,
                      const LambdaGrid& grid, const ArrowConfig& config, const LearnerFactory& factory) {
  require(!stream.empty(), Errc::empty_dataset, "no interaction rounds");
  const std::size_t k = stream.front().costs.size();
  ArrowState state(warm_start, grid, k, config, factory);
  Rng rng(derive_seed(config.seed, "actions"));
  ArrowResult result;
  result.trajectory.rounds.reserve(stream.size());
  for (const auto& round : stream) {
    require(round.costs.size() == k, Errc::invalid_argument, "cost vector length changes within the stream");
    result.trajectory.rounds.push_back(
        state.step(round.context, [&](Action a) { return round.costs[a]; }, rng));
  }
  result.validation_sums.assign(state.validation_sums().begin(), state.validation_sums().end());
  result.final_lambda = state.current_lambda();
  return result;
}

}  // namespace warmcb
