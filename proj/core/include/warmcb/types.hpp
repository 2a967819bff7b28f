#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace warmcb {

// Actions are 0-indexed throughout: action a here is action a+1 in 1-indexed notation.
using Action = std::size_t;

struct Context {
  std::vector<double> features;
  std::optional<std::size_t> id;

  std::size_t dimension() const noexcept { return features.size(); }
};

// Ground-truth cost vector: K >= 2 entries, each in [0, 1].
class CostVector {
 public:
  CostVector() = default;
  explicit CostVector(std::vector<double> costs);

  std::size_t size() const noexcept { return costs_.size(); }
  double operator[](Action a) const { return costs_[a]; }
  std::span<const double> values() const noexcept { return costs_; }

  friend bool operator==(const CostVector&, const CostVector&) = default;

 private:
  std::vector<double> costs_;
};

// Inverse-propensity estimate: at most one nonzero entry, at source_action.
struct IpsCostVector {
  std::vector<double> costs;
  Action source_action = 0;
  double source_propensity = 1.0;

  std::size_t size() const noexcept { return costs.size(); }
  double operator[](Action a) const { return costs[a]; }
};

struct SupervisedExample {
  Context context;
  CostVector costs;
};

struct BanditObservation {
  Context context;
  Action action = 0;
  double observed_cost = 0.0;
  double propensity = 1.0;
};

// One logged interaction round: what was seen plus its IPS vector.
struct BanditRecord {
  BanditObservation observation;
  IpsCostVector ips;
};

class ActionDistribution {
 public:
  // Entries must be nonnegative and sum to 1 within 1e-12.
  explicit ActionDistribution(std::vector<double> probs);

  static ActionDistribution uniform(std::size_t num_actions);
  static ActionDistribution point_mass(std::size_t num_actions, Action action);

  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](Action a) const { return probs_[a]; }
  std::span<const double> probs() const noexcept { return probs_; }

  friend bool operator==(const ActionDistribution&, const ActionDistribution&) = default;

 private:
  std::vector<double> probs_;
};

// Deterministic context -> action map.
using Policy = std::function<Action(const Context&)>;

// Per-source multipliers in a mixed objective.
struct SourceWeights {
  double supervised = 1.0;
  double bandit = 1.0;

  static SourceWeights from_lambda(double lambda) { return {1.0 - lambda, lambda}; }
};

}  // namespace warmcb
