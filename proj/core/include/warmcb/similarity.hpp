#pragma once

#include <cstddef>
#include <vector>

#include "warmcb/noise.hpp"
#include "warmcb/tabular.hpp"

namespace warmcb {

// Exact finite distribution over (context, cost vector). Context i has id i.
class FiniteCostDistribution {
 public:
  struct Outcome {
    double prob = 1.0;
    std::vector<double> costs;
  };
  struct ContextEntry {
    double weight = 0.0;
    std::vector<Outcome> outcomes;
  };

  FiniteCostDistribution(std::size_t num_actions, std::vector<ContextEntry> contexts);

  // One deterministic cost vector per context.
  static FiniteCostDistribution from_expected(std::size_t num_actions, std::vector<double> weights,
                                              std::vector<std::vector<double>> expected_costs);

  std::size_t num_actions() const noexcept { return num_actions_; }
  std::size_t num_contexts() const noexcept { return contexts_.size(); }
  const ContextEntry& context(std::size_t i) const { return contexts_.at(i); }
  double weight(std::size_t i) const { return contexts_.at(i).weight; }

  // E[c(a) | x_i].
  double expected_cost(std::size_t i, Action a) const { return expected_.at(i * num_actions_ + a); }

  std::vector<std::size_t> context_ids() const;

 private:
  std::size_t num_actions_;
  std::vector<ContextEntry> contexts_;
  std::vector<double> expected_;
};

// Multiclass source: per-context weight and label law P(y = a | x).
struct LabelDistribution {
  struct Entry {
    double weight = 0.0;
    std::vector<double> label_probs;
  };
  std::size_t num_actions = 0;
  std::vector<Entry> contexts;
};

// Zero-one costs c_y(a) = I(a != y) under the label law.
FiniteCostDistribution from_labels(const LabelDistribution& labels);

// Exact law of the corrupted label.
LabelDistribution corrupt_exact(const LabelDistribution& labels, const NoiseModel& model, std::size_t majority_label);

// Label of highest total probability mass; ties to the lowest label.
std::size_t majority_label(const LabelDistribution& labels);

double policy_cost(const FiniteCostDistribution& d, const TabularPolicy& pi);

double excess_cost(const FiniteCostDistribution& d, const TabularPolicy& pi, const TabularPolicy& pi_star);

// Lowest-index optimum of the class under d.
std::size_t optimal_policy(const FiniteCostDistribution& d, const TabularPolicyClass& cls);

struct SimilarityParams {
  double alpha = 1.0;
  double delta = 0.0;
};

// E_{D2}[excess] >= alpha * E_{D1}[excess] - delta for every policy, pi* the D1 optimum,
// with 1e-12 slack.
bool check_similarity(const FiniteCostDistribution& d1, const FiniteCostDistribution& d2,
                      const TabularPolicyClass& cls, SimilarityParams params);

// Smallest delta for which check_similarity holds at this alpha.
double min_delta_for_alpha(const FiniteCostDistribution& d1, const FiniteCostDistribution& d2,
                           const TabularPolicyClass& cls, double alpha);

// Supervised source that labels the lowest-cost action of each drawn cost vector.
FiniteCostDistribution label_lowest_cost(const FiniteCostDistribution& d1);

// 2 * P(c(pi*(x)) >= min_{a != pi*(x)} c(a)) under d1.
double lowest_cost_label_delta(const FiniteCostDistribution& d1, const TabularPolicyClass& cls);

}  // namespace warmcb
