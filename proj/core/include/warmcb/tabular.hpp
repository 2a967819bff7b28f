#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "warmcb/types.hpp"

namespace warmcb {

// assignment[i] is the action taken on the i-th context of the owning class's universe.
struct TabularPolicy {
  std::vector<Action> assignment;

  friend bool operator==(const TabularPolicy&, const TabularPolicy&) = default;
};

// Explicit finite policy class over a fixed universe of context ids. Contexts are
// looked up by Context::id.
class TabularPolicyClass {
 public:
  TabularPolicyClass(std::vector<TabularPolicy> policies, std::vector<std::size_t> context_universe,
                     std::size_t num_actions);

  std::size_t size() const noexcept { return policies_.size(); }
  std::size_t num_actions() const noexcept { return num_actions_; }
  std::size_t num_contexts() const noexcept { return universe_.size(); }
  std::span<const std::size_t> universe() const noexcept { return universe_; }
  const TabularPolicy& policy(std::size_t index) const { return policies_.at(index); }

  // Position of a context in the universe; throws if the id is missing or unknown.
  std::size_t position_of(const Context& x) const;
  std::size_t position_of_id(std::size_t id) const;

  Action act(std::size_t policy_index, const Context& x) const;
  Policy as_policy(std::size_t policy_index) const;

 private:
  std::vector<TabularPolicy> policies_;
  std::vector<std::size_t> universe_;
  std::shared_ptr<const std::unordered_map<std::size_t, std::size_t>> positions_;
  std::size_t num_actions_;
};

inline constexpr std::size_t kMaxEnumeratedPolicies = 1'000'000;

// All K^|X| maps in lexicographic order (first context most significant).
TabularPolicyClass enumerate_full_class(std::vector<std::size_t> context_ids, std::size_t num_actions);

// Per-(context, action) accumulated cost, the sufficient statistic for tabular ERM.
class ContextCostTable {
 public:
  ContextCostTable(std::size_t num_contexts, std::size_t num_actions)
      : num_actions_(num_actions), sums_(num_contexts * num_actions, 0.0) {}

  void add(std::size_t position, std::span<const double> costs, double weight = 1.0);
  double at(std::size_t position, Action a) const { return sums_[position * num_actions_ + a]; }
  std::size_t num_actions() const noexcept { return num_actions_; }
  std::size_t num_contexts() const noexcept { return num_actions_ == 0 ? 0 : sums_.size() / num_actions_; }

  // Entrywise sup_weight * sup + bandit_weight * bandit.
  static ContextCostTable combine(const ContextCostTable& supervised, const ContextCostTable& bandit,
                                  SourceWeights weights);

 private:
  std::size_t num_actions_;
  std::vector<double> sums_;
};

ContextCostTable supervised_table(const TabularPolicyClass& cls, std::span<const SupervisedExample> data);
ContextCostTable bandit_table(const TabularPolicyClass& cls, std::span<const BanditRecord> log);

double policy_objective(const TabularPolicyClass& cls, std::size_t policy_index, const ContextCostTable& table);

// Lowest-index minimizer of the table objective over the class.
std::size_t argmin_policy(const TabularPolicyClass& cls, const ContextCostTable& table);

// argmin over the class of lambda * sum IPS + (1 - lambda) * sum supervised cost
// (unnormalized sums); ties go to the lowest policy index.
std::size_t weighted_erm(const TabularPolicyClass& cls, std::span<const BanditRecord> bandit_log,
                         std::span<const SupervisedExample> sup_set, double lambda);

// Same with explicit per-source multipliers (used for per-source averaged objectives).
std::size_t weighted_erm(const TabularPolicyClass& cls, std::span<const BanditRecord> bandit_log,
                         std::span<const SupervisedExample> sup_set, SourceWeights weights);

}  // namespace warmcb
