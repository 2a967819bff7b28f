#include "warmcb/supgt.hpp"

#include <algorithm>
#include <string>

#include "warmcb/core.hpp"
#include "warmcb/error.hpp"
#include "warmcb/learner.hpp"
#include "warmcb/rng.hpp"

namespace warmcb {

EpochSchedule epoch_schedule(std::size_t nb) {
  require(nb >= 2, Errc::invalid_argument, "epoch schedule needs nb >= 2");
  EpochSchedule s;
  std::size_t e = 0;
  while ((std::size_t{1} << e) < nb) ++e;
  s.num_epochs = e;
  s.boundaries.push_back(0);
  for (std::size_t i = 1; i <= e; ++i) s.boundaries.push_back(std::min(std::size_t{1} << i, nb));
  return s;
}

SupervisedPartition partition_supervised(std::span<const SupervisedExample> data, std::size_t num_epochs) {
  require(num_epochs >= 1, Errc::invalid_argument, "need at least one epoch");
  require(data.size() >= num_epochs + 1, Errc::too_few_examples,
          std::to_string(data.size()) + " supervised examples cannot fill " + std::to_string(num_epochs + 1) +
              " parts");
  const std::size_t part = data.size() / (num_epochs + 1);
  SupervisedPartition out;
  out.train.assign(data.begin(), data.begin() + part);
  for (std::size_t e = 1; e <= num_epochs; ++e) {
    out.validation.emplace_back(data.begin() + e * part, data.begin() + (e + 1) * part);
  }
  return out;
}

namespace {

SourceWeights averaged_weights(std::size_t num_bandit, std::size_t num_sup, double lambda) {
  return {num_sup == 0 ? 0.0 : (1.0 - lambda) / static_cast<double>(num_sup),
          num_bandit == 0 ? 0.0 : lambda / static_cast<double>(num_bandit)};
}

}  // namespace

EpochTrainer tabular_epoch_trainer(std::shared_ptr<const TabularPolicyClass> policy_class) {
  require(policy_class != nullptr, Errc::invalid_argument, "null policy class");
  return [cls = std::move(policy_class)](std::span<const BanditRecord> log, std::span<const SupervisedExample> train,
                                         double lambda, std::uint64_t) {
    const std::size_t index = weighted_erm(*cls, log, train, averaged_weights(log.size(), train.size(), lambda));
    return TrainedPolicy{cls->as_policy(index), index};
  };
}

EpochTrainer linear_epoch_trainer(std::size_t num_actions, std::size_t dimension,
                                  const LinearLearnerOptions& options) {
  return [=](std::span<const BanditRecord> log, std::span<const SupervisedExample> train, double lambda,
             std::uint64_t seed) {
    SourceWeights w = averaged_weights(log.size(), train.size(), lambda);
    const double total = static_cast<double>(log.size() + train.size());
    w.supervised *= total;
    w.bandit *= total;
    auto reg = std::make_shared<LinearCostRegressor>(
        options.solver == LinearSolver::exact
            ? solve_weighted(train, log, w, num_actions, dimension, options.ridge)
            : train_weighted(train, log, w, num_actions, dimension,
                             {options.retrain_passes, options.learning_rate, seed}));
    return TrainedPolicy{[reg](const Context& x) { return reg->induced_action(x); }, std::nullopt};
  };
}

SupGtResult run_supgt(std::span<const SupervisedExample> supervised, std::span<const InteractionRound> stream,
                      const LambdaGrid& grid, const SupGtConfig& config, const EpochTrainer& trainer) {
  require(config.epsilon >= 0.0 && config.epsilon <= 1.0, Errc::invalid_argument, "epsilon outside [0, 1]");
  const EpochSchedule schedule = epoch_schedule(stream.size());
  const SupervisedPartition parts = partition_supervised(supervised, schedule.num_epochs);
  const std::size_t k = stream.front().costs.size();

  Rng rng(derive_seed(config.seed, "actions"));
  SupGtResult result;
  std::vector<BanditRecord> log;
  std::optional<TrainedPolicy> anchor;
  double anchor_lambda = 0.0;

  for (std::size_t e = 1; e <= schedule.num_epochs; ++e) {
    for (std::size_t t = schedule.boundaries[e - 1] + 1; t <= schedule.boundaries[e]; ++t) {
      const auto& round = stream[t - 1];
      require(round.costs.size() == k, Errc::invalid_argument, "cost vector length changes within the stream");
      const ActionDistribution dist =
          e == 1 ? ActionDistribution::uniform(k)
                 : epsilon_greedy_mix(ActionDistribution::point_mass(k, anchor->policy(round.context)),
                                      config.epsilon);
      const SampledAction sampled = sample_action(dist, rng);
      BanditObservation obs{round.context, sampled.action, round.costs[sampled.action], sampled.propensity};
      IpsCostVector ips = ips_estimate(obs, k);
      result.trajectory.rounds.push_back({round.context.id.value_or(t - 1), sampled.action, obs.observed_cost,
                                          sampled.propensity, e == 1 ? 0.0 : anchor_lambda,
                                          std::vector<double>(dist.probs().begin(), dist.probs().end())});
      log.push_back({std::move(obs), std::move(ips)});
    }

    std::optional<TrainedPolicy> best;
    double best_lambda = 0.0;
    double best_error = 0.0;
    for (double lambda : grid.values()) {
      TrainedPolicy candidate = trainer(
          log, parts.train, lambda,
          derive_seed(config.seed, "epoch=" + std::to_string(e) + "|lambda=" + lambda_key(lambda)));
      const double err = empirical_cost(candidate.policy, parts.validation[e - 1]);
      if (!best || err < best_error) {
        best = std::move(candidate);
        best_lambda = lambda;
        best_error = err;
      }
    }
    result.epochs.push_back({e, best_lambda, best->index, best->policy});
    anchor = std::move(best);
    anchor_lambda = best_lambda;
  }
  return result;
}

}  // namespace warmcb
