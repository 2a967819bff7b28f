#include "warmcb/types.hpp"

#include <cmath>
#include <string>

#include "warmcb/error.hpp"

namespace warmcb {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::invalid_propensity: return "invalid_propensity";
    case Errc::invalid_cost: return "invalid_cost";
    case Errc::empty_dataset: return "empty_dataset";
    case Errc::class_too_large: return "class_too_large";
    case Errc::degenerate_objective: return "degenerate_objective";
    case Errc::degenerate_bound: return "degenerate_bound";
    case Errc::dimension_mismatch: return "dimension_mismatch";
    case Errc::too_few_examples: return "too_few_examples";
    case Errc::parse_error: return "parse_error";
    case Errc::schema_error: return "schema_error";
    case Errc::io_error: return "io_error";
  }
  return "unknown";
}

CostVector::CostVector(std::vector<double> costs) : costs_(std::move(costs)) {
  require(costs_.size() >= 2, Errc::invalid_cost, "cost vector needs at least 2 actions");
  for (double c : costs_) {
    require(c >= 0.0 && c <= 1.0, Errc::invalid_cost,
            "cost " + std::to_string(c) + " outside [0, 1]");
  }
}

ActionDistribution::ActionDistribution(std::vector<double> probs) : probs_(std::move(probs)) {
  require(!probs_.empty(), Errc::invalid_argument, "empty action distribution");
  double total = 0.0;
  for (double p : probs_) {
    require(std::isfinite(p) && p >= 0.0, Errc::invalid_argument,
            "action probabilities must be finite and nonnegative");
    total += p;
  }
  require(std::abs(total - 1.0) <= 1e-12, Errc::invalid_argument,
          "action probabilities sum to " + std::to_string(total));
}

ActionDistribution ActionDistribution::uniform(std::size_t num_actions) {
  require(num_actions > 0, Errc::invalid_argument, "uniform over zero actions");
  return ActionDistribution(std::vector<double>(num_actions, 1.0 / static_cast<double>(num_actions)));
}

ActionDistribution ActionDistribution::point_mass(std::size_t num_actions, Action action) {
  require(action < num_actions, Errc::invalid_argument, "point mass action out of range");
  std::vector<double> p(num_actions, 0.0);
  p[action] = 1.0;
  return ActionDistribution(std::move(p));
}

}  // namespace warmcb
