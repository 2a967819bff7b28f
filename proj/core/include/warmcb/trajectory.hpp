#pragma once

#include <cstddef>
#include <vector>

#include "warmcb/types.hpp"

namespace warmcb {

// One interaction round: the context is c^b's source, costs the ground-truth bandit costs.
struct InteractionRound {
  Context context;
  CostVector costs;
};

struct RoundRecord {
  std::size_t context_index = 0;
  Action action = 0;
  double cost = 0.0;
  double propensity = 1.0;
  // Lambda whose policy drove the round, 0 for algorithms without one.
  double lambda = 0.0;
  std::vector<double> probs;
};

struct Trajectory {
  std::vector<RoundRecord> rounds;

  std::size_t size() const noexcept { return rounds.size(); }
  bool empty() const noexcept { return rounds.empty(); }
};

}  // namespace warmcb
