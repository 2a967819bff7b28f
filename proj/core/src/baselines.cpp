#include "warmcb/baselines.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <vector>

#include "warmcb/core.hpp"
#include "warmcb/error.hpp"
#include "warmcb/rng.hpp"

namespace warmcb {

namespace {

std::size_t stream_actions(std::span<const InteractionRound> stream) {
  require(!stream.empty(), Errc::empty_dataset, "no interaction rounds");
  return stream.front().costs.size();
}

// Plays one epsilon-greedy round around the learner and feeds it the IPS record.
RoundRecord bandit_round(PolicyLearner& learner, const Context& x, const CostVector& costs, std::size_t t,
                         double epsilon, Rng& rng) {
  const std::size_t k = costs.size();
  const ActionDistribution dist = t == 1 ? ActionDistribution::uniform(k)
                                         : epsilon_greedy_mix(ActionDistribution::point_mass(k, learner.act(x)), epsilon);
  const SampledAction sampled = sample_action(dist, rng);
  BanditObservation obs{x, sampled.action, costs[sampled.action], sampled.propensity};
  IpsCostVector ips = ips_estimate(obs, k);
  learner.observe({obs, std::move(ips)});
  return {x.id.value_or(t - 1), sampled.action, obs.observed_cost, sampled.propensity, 1.0,
          std::vector<double>(dist.probs().begin(), dist.probs().end())};
}

Trajectory fixed_policy_trajectory(std::span<const InteractionRound> stream, const Policy& policy) {
  const std::size_t k = stream_actions(stream);
  Trajectory traj;
  traj.rounds.reserve(stream.size());
  for (std::size_t t = 0; t < stream.size(); ++t) {
    const auto& round = stream[t];
    const Action a = policy(round.context);
    std::vector<double> probs(k, 0.0);
    probs[a] = 1.0;
    traj.rounds.push_back({round.context.id.value_or(t), a, round.costs[a], 1.0, 0.0, std::move(probs)});
  }
  return traj;
}

}  // namespace

Trajectory run_bandit_only(std::span<const InteractionRound> stream, const BanditConfig& config,
                           const LearnerFactory& factory) {
  stream_actions(stream);
  require(config.epsilon >= 0.0 && config.epsilon <= 1.0, Errc::invalid_argument, "epsilon outside [0, 1]");
  auto learner = factory({}, 1.0, learner_seed(config.seed, 1.0));
  Rng rng(derive_seed(config.seed, "actions"));
  Trajectory traj;
  traj.rounds.reserve(stream.size());
  for (std::size_t t = 1; t <= stream.size(); ++t) {
    const auto& round = stream[t - 1];
    traj.rounds.push_back(bandit_round(*learner, round.context, round.costs, t, config.epsilon, rng));
  }
  return traj;
}

Trajectory run_sup_only(std::span<const SupervisedExample> warm_start, std::span<const InteractionRound> stream,
                        const LearnerFactory& factory, std::uint64_t seed) {
  require(!warm_start.empty(), Errc::empty_dataset, "supervised-only baseline needs a warm start");
  auto learner = factory(warm_start, 0.0, learner_seed(seed, 0.0));
  return fixed_policy_trajectory(stream, learner->snapshot());
}

Action majority_label(std::span<const std::size_t> labels, std::size_t num_actions) {
  require(!labels.empty(), Errc::empty_dataset, "no labels");
  std::vector<std::size_t> counts(num_actions, 0);
  for (std::size_t y : labels) {
    require(y < num_actions, Errc::invalid_argument, "label out of range");
    ++counts[y];
  }
  Action best = 0;
  for (Action a = 1; a < num_actions; ++a) {
    if (counts[a] > counts[best]) best = a;
  }
  return best;
}

Trajectory run_majority(std::span<const std::size_t> dataset_labels, std::span<const InteractionRound> stream) {
  const Action a = majority_label(dataset_labels, stream_actions(stream));
  return fixed_policy_trajectory(stream, [a](const Context&) { return a; });
}

Trajectory run_sim_bandit(std::span<const SupervisedExample> warm_start, std::span<const InteractionRound> stream,
                          const BanditConfig& config, const LearnerFactory& factory) {
  stream_actions(stream);
  require(config.epsilon >= 0.0 && config.epsilon <= 1.0, Errc::invalid_argument, "epsilon outside [0, 1]");
  auto learner = factory({}, 1.0, learner_seed(config.seed, 1.0));
  Rng rng(derive_seed(config.seed, "actions"));
  std::size_t t = 0;
  for (const auto& ex : warm_start) {
    bandit_round(*learner, ex.context, ex.costs, ++t, config.epsilon, rng);
  }
  Trajectory traj;
  traj.rounds.reserve(stream.size());
  for (std::size_t i = 0; i < stream.size(); ++i) {
    const auto& round = stream[i];
    RoundRecord rec = bandit_round(*learner, round.context, round.costs, ++t, config.epsilon, rng);
    rec.context_index = round.context.id.value_or(i);
    traj.rounds.push_back(std::move(rec));
  }
  return traj;
}

UcbResult run_ucb_warmstart(double delta, std::size_t ns, std::size_t nb, UcbOptions options) {
  require(delta > 0.0 && delta < 1.0, Errc::invalid_argument, "delta must be in (0, 1)");
  require(nb >= 1, Errc::invalid_argument, "nb must be at least 1");
  const double warm_cost[2] = {0.5, 0.5 + delta / 2};
  const double bandit_cost[2] = {0.5, 0.5 - delta / 2};
  const double n_s = static_cast<double>(ns);
  double sums[2] = {n_s * warm_cost[0], n_s * warm_cost[1]};
  std::size_t pulls[2] = {0, 0};

  UcbResult result;
  result.first_arm2_round = nb + 1;
  for (std::size_t t = 1; t <= nb; ++t) {
    const double log_t = std::log(static_cast<double>(options.shifted_log ? t + ns : t));
    double lcb[2];
    for (int i = 0; i < 2; ++i) {
      const double n = n_s + static_cast<double>(pulls[i]);
      lcb[i] = n == 0.0 ? -std::numeric_limits<double>::infinity() : sums[i] / n - 2.0 * std::sqrt(log_t / n);
    }
    const int arm = lcb[1] < lcb[0] ? 1 : 0;
    if (arm == 1 && result.first_arm2_round == nb + 1) {
      result.first_arm2_round = t;
      result.regret_at_first_play = result.cumulative_regret;
    }
    if (result.first_arm2_round == nb + 1 && ns > 0) {
      // Before arm 2 is ever pulled: arm 1 has t - 1 bandit pulls, arm 2 none.
      const double tt = static_cast<double>(t - 1);
      const double gap = delta / 2 - 2.0 * std::sqrt(std::log(tt + 1) / n_s);
      if (!(gap > -2.0 * std::sqrt(std::log(tt + 1) / (n_s + tt)))) result.inequality_held = false;
    }
    sums[arm] += bandit_cost[arm];
    ++pulls[arm];
    result.cumulative_regret += bandit_cost[arm] - bandit_cost[1];
  }
  if (result.first_arm2_round == nb + 1) result.regret_at_first_play = result.cumulative_regret;
  return result;
}

}  // namespace warmcb
