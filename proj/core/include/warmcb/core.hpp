#pragma once

#include <span>

#include "warmcb/rng.hpp"
#include "warmcb/types.hpp"

namespace warmcb {

// Places observed_cost / propensity at the chosen action, zero elsewhere. Not clipped:
// under epsilon-greedy play the estimate is bounded by K / epsilon.
IpsCostVector ips_estimate(const BanditObservation& obs, std::size_t num_actions);

// (1 - epsilon) * base + epsilon / K on every action.
ActionDistribution epsilon_greedy_mix(const ActionDistribution& base, double epsilon);

struct SampledAction {
  Action action = 0;
  double propensity = 1.0;
};

// Inverse-CDF sampling with a single uniform draw from the stream.
SampledAction sample_action(const ActionDistribution& dist, Rng& rng);

// Mean of costs[policy(context)] over the examples.
double empirical_cost(const Policy& policy, std::span<const SupervisedExample> data);

// Index of the smallest entry; ties go to the lowest index.
std::size_t argmin_index(std::span<const double> values);

}  // namespace warmcb
