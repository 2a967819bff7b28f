#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "warmcb/learner.hpp"
#include "warmcb/trajectory.hpp"
#include "warmcb/types.hpp"

namespace warmcb {

struct BanditConfig {
  double epsilon = 0.0125;
  std::uint64_t seed = 0;
};

// Epsilon-greedy around the pure-IPS (lambda = 1) learner; round 1 is uniform.
Trajectory run_bandit_only(std::span<const InteractionRound> stream, const BanditConfig& config,
                           const LearnerFactory& factory);

// Trains once on the warm start (lambda = 0) and plays that policy with no exploration.
Trajectory run_sup_only(std::span<const SupervisedExample> warm_start, std::span<const InteractionRound> stream,
                        const LearnerFactory& factory, std::uint64_t seed);

// Most frequent label; ties go to the lowest label.
Action majority_label(std::span<const std::size_t> labels, std::size_t num_actions);

Trajectory run_majority(std::span<const std::size_t> dataset_labels, std::span<const InteractionRound> stream);

// Replays the warm start as bandit rounds (not reported) before the interaction stream.
Trajectory run_sim_bandit(std::span<const SupervisedExample> warm_start, std::span<const InteractionRound> stream,
                          const BanditConfig& config, const LearnerFactory& factory);

struct UcbOptions {
  // Use ln(t + ns) in the confidence width instead of ln t.
  bool shifted_log = false;
};

struct UcbResult {
  // 1-based round of the first arm-2 pull, nb + 1 if it never happens.
  std::size_t first_arm2_round = 0;
  double regret_at_first_play = 0.0;
  double cumulative_regret = 0.0;
  // The pre-play inequality held on every round before the first arm-2 pull.
  bool inequality_held = true;
};

// Two-armed UCB with ns warm samples of costs (0.5, 0.5 + delta/2) per arm, played
// against bandit costs (0.5, 0.5 - delta/2). Arm 1 is index 0.
UcbResult run_ucb_warmstart(double delta, std::size_t ns, std::size_t nb, UcbOptions options = {});

}  // namespace warmcb
