#include "warmcb/core.hpp"

#include <cmath>
#include <string>

#include "warmcb/error.hpp"

namespace warmcb {

IpsCostVector ips_estimate(const BanditObservation& obs, std::size_t num_actions) {
  require(obs.propensity > 0.0 && obs.propensity <= 1.0, Errc::invalid_propensity,
          "propensity " + std::to_string(obs.propensity) + " outside (0, 1]");
  require(obs.action < num_actions, Errc::invalid_argument, "action out of range");
  require(obs.observed_cost >= 0.0 && obs.observed_cost <= 1.0, Errc::invalid_cost,
          "observed cost outside [0, 1]");
  IpsCostVector out;
  out.costs.assign(num_actions, 0.0);
  out.costs[obs.action] = obs.observed_cost / obs.propensity;
  out.source_action = obs.action;
  out.source_propensity = obs.propensity;
  return out;
}

ActionDistribution epsilon_greedy_mix(const ActionDistribution& base, double epsilon) {
  require(epsilon >= 0.0 && epsilon <= 1.0, Errc::invalid_argument, "epsilon outside [0, 1]");
  const auto k = static_cast<double>(base.size());
  std::vector<double> p(base.size());
  for (std::size_t a = 0; a < base.size(); ++a) {
    p[a] = (1.0 - epsilon) * base[a] + epsilon / k;
  }
  return ActionDistribution(std::move(p));
}

SampledAction sample_action(const ActionDistribution& dist, Rng& rng) {
  const double u = rng.uniform();
  double cumulative = 0.0;
  Action last_supported = 0;
  for (Action a = 0; a < dist.size(); ++a) {
    if (dist[a] <= 0.0) continue;
    last_supported = a;
    cumulative += dist[a];
    if (u < cumulative) return {a, dist[a]};
  }
  // Rounding left u above the accumulated mass.
  return {last_supported, dist[last_supported]};
}

double empirical_cost(const Policy& policy, std::span<const SupervisedExample> data) {
  require(!data.empty(), Errc::empty_dataset, "empirical_cost on an empty dataset");
  double total = 0.0;
  for (const auto& ex : data) {
    const Action a = policy(ex.context);
    require(a < ex.costs.size(), Errc::invalid_argument, "policy action out of range");
    total += ex.costs[a];
  }
  return total / static_cast<double>(data.size());
}

std::size_t argmin_index(std::span<const double> values) {
  require(!values.empty(), Errc::invalid_argument, "argmin of an empty range");
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] < values[best]) best = i;
  }
  return best;
}

}  // namespace warmcb
