#include "warmcb/tabular.hpp"

#include <string>

#include "warmcb/error.hpp"

namespace warmcb {

TabularPolicyClass::TabularPolicyClass(std::vector<TabularPolicy> policies,
                                       std::vector<std::size_t> context_universe,
                                       std::size_t num_actions)
    : policies_(std::move(policies)), universe_(std::move(context_universe)), num_actions_(num_actions) {
  require(!policies_.empty(), Errc::invalid_argument, "policy class is empty");
  require(num_actions_ >= 1, Errc::invalid_argument, "policy class needs at least one action");
  auto positions = std::make_shared<std::unordered_map<std::size_t, std::size_t>>();
  for (std::size_t i = 0; i < universe_.size(); ++i) {
    const bool inserted = positions->emplace(universe_[i], i).second;
    require(inserted, Errc::invalid_argument, "duplicate context id in universe");
  }
  for (const auto& p : policies_) {
    require(p.assignment.size() == universe_.size(), Errc::invalid_argument,
            "policy not defined on exactly the context universe");
    for (Action a : p.assignment) require(a < num_actions_, Errc::invalid_argument, "policy action out of range");
  }
  positions_ = std::move(positions);
}

std::size_t TabularPolicyClass::position_of_id(std::size_t id) const {
  auto it = positions_->find(id);
  require(it != positions_->end(), Errc::invalid_argument,
          "context id " + std::to_string(id) + " not in the policy universe");
  return it->second;
}

std::size_t TabularPolicyClass::position_of(const Context& x) const {
  require(x.id.has_value(), Errc::invalid_argument, "tabular policies need contexts with ids");
  return position_of_id(*x.id);
}

Action TabularPolicyClass::act(std::size_t policy_index, const Context& x) const {
  return policies_.at(policy_index).assignment[position_of(x)];
}

Policy TabularPolicyClass::as_policy(std::size_t policy_index) const {
  return [assignment = policies_.at(policy_index).assignment, positions = positions_](const Context& x) {
    require(x.id.has_value(), Errc::invalid_argument, "tabular policies need contexts with ids");
    auto it = positions->find(*x.id);
    require(it != positions->end(), Errc::invalid_argument, "context id not in the policy universe");
    return assignment[it->second];
  };
}

TabularPolicyClass enumerate_full_class(std::vector<std::size_t> context_ids, std::size_t num_actions) {
  require(num_actions >= 1, Errc::invalid_argument, "need at least one action");
  std::size_t count = 1;
  for (std::size_t i = 0; i < context_ids.size(); ++i) {
    require(count <= kMaxEnumeratedPolicies / num_actions, Errc::class_too_large,
            "K^|X| exceeds " + std::to_string(kMaxEnumeratedPolicies) + " policies");
    count *= num_actions;
  }
  std::vector<TabularPolicy> policies;
  policies.reserve(count);
  std::vector<Action> digits(context_ids.size(), 0);
  for (std::size_t n = 0; n < count; ++n) {
    policies.push_back({digits});
    // Odometer increment, last context least significant.
    for (std::size_t i = digits.size(); i-- > 0;) {
      if (++digits[i] < num_actions) break;
      digits[i] = 0;
    }
  }
  return TabularPolicyClass(std::move(policies), std::move(context_ids), num_actions);
}

void ContextCostTable::add(std::size_t position, std::span<const double> costs, double weight) {
  require(costs.size() == num_actions_, Errc::invalid_argument, "cost vector length != K");
  double* row = &sums_.at(position * num_actions_);
  for (std::size_t a = 0; a < num_actions_; ++a) row[a] += weight * costs[a];
}

ContextCostTable ContextCostTable::combine(const ContextCostTable& supervised, const ContextCostTable& bandit,
                                           SourceWeights weights) {
  require(supervised.sums_.size() == bandit.sums_.size() && supervised.num_actions_ == bandit.num_actions_,
          Errc::invalid_argument, "cost table shapes differ");
  ContextCostTable out(supervised.num_contexts(), supervised.num_actions_);
  for (std::size_t i = 0; i < out.sums_.size(); ++i) {
    out.sums_[i] = weights.supervised * supervised.sums_[i] + weights.bandit * bandit.sums_[i];
  }
  return out;
}

ContextCostTable supervised_table(const TabularPolicyClass& cls, std::span<const SupervisedExample> data) {
  ContextCostTable table(cls.num_contexts(), cls.num_actions());
  for (const auto& ex : data) table.add(cls.position_of(ex.context), ex.costs.values());
  return table;
}

ContextCostTable bandit_table(const TabularPolicyClass& cls, std::span<const BanditRecord> log) {
  ContextCostTable table(cls.num_contexts(), cls.num_actions());
  for (const auto& rec : log) table.add(cls.position_of(rec.observation.context), rec.ips.costs);
  return table;
}

double policy_objective(const TabularPolicyClass& cls, std::size_t policy_index, const ContextCostTable& table) {
  const auto& assignment = cls.policy(policy_index).assignment;
  double total = 0.0;
  for (std::size_t pos = 0; pos < assignment.size(); ++pos) total += table.at(pos, assignment[pos]);
  return total;
}

std::size_t argmin_policy(const TabularPolicyClass& cls, const ContextCostTable& table) {
  std::size_t best = 0;
  double best_value = policy_objective(cls, 0, table);
  for (std::size_t i = 1; i < cls.size(); ++i) {
    const double v = policy_objective(cls, i, table);
    if (v < best_value) {
      best = i;
      best_value = v;
    }
  }
  return best;
}

std::size_t weighted_erm(const TabularPolicyClass& cls, std::span<const BanditRecord> bandit_log,
                         std::span<const SupervisedExample> sup_set, double lambda) {
  require(lambda >= 0.0 && lambda <= 1.0, Errc::invalid_argument, "lambda outside [0, 1]");
  require(lambda > 0.0 || !sup_set.empty(), Errc::degenerate_objective,
          "lambda = 0 with an empty supervised set");
  return weighted_erm(cls, bandit_log, sup_set, SourceWeights::from_lambda(lambda));
}

std::size_t weighted_erm(const TabularPolicyClass& cls, std::span<const BanditRecord> bandit_log,
                         std::span<const SupervisedExample> sup_set, SourceWeights weights) {
  require(weights.supervised >= 0.0 && weights.bandit >= 0.0, Errc::invalid_argument,
          "source weights must be nonnegative");
  const auto table = ContextCostTable::combine(supervised_table(cls, sup_set), bandit_table(cls, bandit_log), weights);
  return argmin_policy(cls, table);
}

}  // namespace warmcb
