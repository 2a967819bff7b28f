#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>

#include "warmcb/linear.hpp"
#include "warmcb/tabular.hpp"
#include "warmcb/types.hpp"

namespace warmcb {

// Maintains the lambda-weighted ERM policy over the warm start plus every bandit
// record observed so far.
class PolicyLearner {
 public:
  virtual ~PolicyLearner() = default;

  virtual Action act(const Context& x) const = 0;
  virtual void observe(const BanditRecord& record) = 0;

  // Frozen copy of the current policy.
  virtual Policy snapshot() const = 0;

  // Index of the current policy inside its class, when the class is explicit.
  virtual std::optional<std::size_t> policy_index() const { return std::nullopt; }
};

using LearnerFactory = std::function<std::unique_ptr<PolicyLearner>(
    std::span<const SupervisedExample> warm_start, double lambda, std::uint64_t seed)>;

// Exact ERM over an explicit class with unnormalized sums.
LearnerFactory tabular_learner_factory(std::shared_ptr<const TabularPolicyClass> policy_class);

enum class LinearSolver {
  // Constant-step gradient descent on the weighted squared loss.
  gradient,
  // Exact weighted least squares with a small ridge.
  exact,
};

struct LinearLearnerOptions {
  LinearSolver solver = LinearSolver::gradient;
  double learning_rate = 0.1;
  double ridge = 1e-3;
  // Gradient solver only: passes over the warm start at construction.
  std::size_t warm_passes = 1;
  // Gradient solver only: retrain from scratch on warm start plus log after every
  // record instead of one incremental step on the newest record.
  bool full_retrain = false;
  std::size_t retrain_passes = 1;
};

LearnerFactory linear_learner_factory(std::size_t num_actions, std::size_t dimension,
                                      LinearLearnerOptions options = {});

// Stable text form of a lambda value used in seed keys.
std::string lambda_key(double lambda);

// Seed for the learner attached to one lambda; shared by every algorithm that trains
// the same objective so equal objectives give equal learners.
std::uint64_t learner_seed(std::uint64_t base, double lambda);

}  // namespace warmcb
