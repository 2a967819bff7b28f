#include "warmcb/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "warmcb/core.hpp"
#include "warmcb/error.hpp"

namespace warmcb {

namespace {

constexpr double kSumTolerance = 1e-9;

void check_probabilities(const std::vector<double>& probs, const char* what) {
  double total = 0.0;
  for (double p : probs) {
    require(std::isfinite(p) && p >= 0.0, Errc::invalid_argument, std::string(what) + " must be nonnegative");
    total += p;
  }
  require(std::abs(total - 1.0) <= kSumTolerance, Errc::invalid_argument,
          std::string(what) + " sum to " + std::to_string(total));
}

}  // namespace

FiniteCostDistribution::FiniteCostDistribution(std::size_t num_actions, std::vector<ContextEntry> contexts)
    : num_actions_(num_actions), contexts_(std::move(contexts)) {
  require(num_actions_ >= 2, Errc::invalid_argument, "need at least 2 actions");
  require(!contexts_.empty(), Errc::empty_dataset, "distribution has no contexts");
  std::vector<double> weights;
  for (const auto& ctx : contexts_) weights.push_back(ctx.weight);
  check_probabilities(weights, "context weights");
  expected_.assign(contexts_.size() * num_actions_, 0.0);
  for (std::size_t i = 0; i < contexts_.size(); ++i) {
    const auto& ctx = contexts_[i];
    require(!ctx.outcomes.empty(), Errc::invalid_argument, "context without outcomes");
    std::vector<double> probs;
    for (const auto& o : ctx.outcomes) {
      probs.push_back(o.prob);
      require(o.costs.size() == num_actions_, Errc::invalid_argument, "cost vector length != K");
      for (Action a = 0; a < num_actions_; ++a) {
        require(o.costs[a] >= 0.0 && o.costs[a] <= 1.0, Errc::invalid_cost, "cost outside [0, 1]");
        expected_[i * num_actions_ + a] += o.prob * o.costs[a];
      }
    }
    check_probabilities(probs, "outcome probabilities");
  }
}

FiniteCostDistribution FiniteCostDistribution::from_expected(std::size_t num_actions, std::vector<double> weights,
                                                             std::vector<std::vector<double>> expected_costs) {
  require(weights.size() == expected_costs.size(), Errc::invalid_argument, "weights and costs differ in length");
  std::vector<ContextEntry> contexts;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    contexts.push_back({weights[i], {{1.0, std::move(expected_costs[i])}}});
  }
  return FiniteCostDistribution(num_actions, std::move(contexts));
}

std::vector<std::size_t> FiniteCostDistribution::context_ids() const {
  std::vector<std::size_t> ids(contexts_.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  return ids;
}

FiniteCostDistribution from_labels(const LabelDistribution& labels) {
  const std::size_t k = labels.num_actions;
  std::vector<FiniteCostDistribution::ContextEntry> contexts;
  for (const auto& entry : labels.contexts) {
    require(entry.label_probs.size() == k, Errc::invalid_argument, "label law length != K");
    check_probabilities(entry.label_probs, "label probabilities");
    FiniteCostDistribution::ContextEntry ctx{entry.weight, {}};
    for (std::size_t y = 0; y < k; ++y) {
      if (entry.label_probs[y] == 0.0) continue;
      std::vector<double> c(k, 1.0);
      c[y] = 0.0;
      ctx.outcomes.push_back({entry.label_probs[y], std::move(c)});
    }
    contexts.push_back(std::move(ctx));
  }
  return FiniteCostDistribution(k, std::move(contexts));
}

LabelDistribution corrupt_exact(const LabelDistribution& labels, const NoiseModel& model, std::size_t majority) {
  const std::size_t k = labels.num_actions;
  require(majority < k, Errc::invalid_argument, "majority label out of range");
  const double p = model.p;
  LabelDistribution out{k, {}};
  for (const auto& entry : labels.contexts) {
    const auto& q = entry.label_probs;
    require(q.size() == k, Errc::invalid_argument, "label law length != K");
    std::vector<double> r(k, 0.0);
    for (std::size_t a = 0; a < k; ++a) {
      switch (model.kind) {
        case NoiseKind::noiseless: r[a] = q[a]; break;
        case NoiseKind::uar: r[a] = (1.0 - p) * q[a] + p / static_cast<double>(k); break;
        case NoiseKind::cyc: r[a] = (1.0 - p) * q[a] + p * q[(a + k - 1) % k]; break;
        case NoiseKind::maj: r[a] = (1.0 - p) * q[a] + (a == majority ? p : 0.0); break;
      }
    }
    out.contexts.push_back({entry.weight, std::move(r)});
  }
  return out;
}

std::size_t majority_label(const LabelDistribution& labels) {
  std::vector<double> mass(labels.num_actions, 0.0);
  for (const auto& entry : labels.contexts) {
    for (std::size_t a = 0; a < labels.num_actions; ++a) mass[a] += entry.weight * entry.label_probs.at(a);
  }
  std::size_t best = 0;
  for (std::size_t a = 1; a < mass.size(); ++a) {
    if (mass[a] > mass[best]) best = a;
  }
  return best;
}

double policy_cost(const FiniteCostDistribution& d, const TabularPolicy& pi) {
  require(pi.assignment.size() == d.num_contexts(), Errc::invalid_argument, "policy and distribution differ in contexts");
  double total = 0.0;
  for (std::size_t i = 0; i < d.num_contexts(); ++i) total += d.weight(i) * d.expected_cost(i, pi.assignment[i]);
  return total;
}

double excess_cost(const FiniteCostDistribution& d, const TabularPolicy& pi, const TabularPolicy& pi_star) {
  return policy_cost(d, pi) - policy_cost(d, pi_star);
}

std::size_t optimal_policy(const FiniteCostDistribution& d, const TabularPolicyClass& cls) {
  std::vector<double> costs(cls.size());
  for (std::size_t i = 0; i < cls.size(); ++i) costs[i] = policy_cost(d, cls.policy(i));
  return argmin_index(costs);
}

double min_delta_for_alpha(const FiniteCostDistribution& d1, const FiniteCostDistribution& d2,
                           const TabularPolicyClass& cls, double alpha) {
  require(alpha > 0.0, Errc::invalid_argument, "alpha must be positive");
  require(d1.num_contexts() == d2.num_contexts() && d1.num_actions() == d2.num_actions(), Errc::invalid_argument,
          "distributions differ in shape");
  const auto& pi_star = cls.policy(optimal_policy(d1, cls));
  double worst = 0.0;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    const auto& pi = cls.policy(i);
    worst = std::max(worst, alpha * excess_cost(d1, pi, pi_star) - excess_cost(d2, pi, pi_star));
  }
  return worst;
}

bool check_similarity(const FiniteCostDistribution& d1, const FiniteCostDistribution& d2,
                      const TabularPolicyClass& cls, SimilarityParams params) {
  require(params.delta >= 0.0, Errc::invalid_argument, "delta must be nonnegative");
  return min_delta_for_alpha(d1, d2, cls, params.alpha) <= params.delta + 1e-12;
}

FiniteCostDistribution label_lowest_cost(const FiniteCostDistribution& d1) {
  const std::size_t k = d1.num_actions();
  std::vector<FiniteCostDistribution::ContextEntry> contexts;
  for (std::size_t i = 0; i < d1.num_contexts(); ++i) {
    const auto& src = d1.context(i);
    FiniteCostDistribution::ContextEntry ctx{src.weight, {}};
    for (const auto& o : src.outcomes) {
      std::vector<double> c(k, 1.0);
      c[argmin_index(o.costs)] = 0.0;
      ctx.outcomes.push_back({o.prob, std::move(c)});
    }
    contexts.push_back(std::move(ctx));
  }
  return FiniteCostDistribution(k, std::move(contexts));
}

double lowest_cost_label_delta(const FiniteCostDistribution& d1, const TabularPolicyClass& cls) {
  const auto& pi_star = cls.policy(optimal_policy(d1, cls));
  double prob = 0.0;
  for (std::size_t i = 0; i < d1.num_contexts(); ++i) {
    const Action a_star = pi_star.assignment[i];
    for (const auto& o : d1.context(i).outcomes) {
      double other = std::numeric_limits<double>::infinity();
      for (Action a = 0; a < d1.num_actions(); ++a) {
        if (a != a_star) other = std::min(other, o.costs[a]);
      }
      if (o.costs[a_star] >= other) prob += d1.weight(i) * o.prob;
    }
  }
  return 2.0 * prob;
}

}  // namespace warmcb
