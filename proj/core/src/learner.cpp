#include "warmcb/learner.hpp"

#include <charconv>
#include <vector>

#include "warmcb/error.hpp"
#include "warmcb/rng.hpp"

namespace warmcb {

namespace {

class TabularLearner final : public PolicyLearner {
 public:
  TabularLearner(std::shared_ptr<const TabularPolicyClass> cls, std::span<const SupervisedExample> warm,
                 double lambda)
      : cls_(std::move(cls)), lambda_(lambda), table_(cls_->num_contexts(), cls_->num_actions()) {
    require(lambda >= 0.0 && lambda <= 1.0, Errc::invalid_argument, "lambda outside [0, 1]");
    if (lambda < 1.0) {
      for (const auto& ex : warm) table_.add(cls_->position_of(ex.context), ex.costs.values(), 1.0 - lambda);
    }
    current_ = argmin_policy(*cls_, table_);
  }

  Action act(const Context& x) const override { return cls_->act(current_, x); }

  void observe(const BanditRecord& record) override {
    if (lambda_ > 0.0) table_.add(cls_->position_of(record.observation.context), record.ips.costs, lambda_);
    current_ = argmin_policy(*cls_, table_);
  }

  Policy snapshot() const override { return cls_->as_policy(current_); }
  std::optional<std::size_t> policy_index() const override { return current_; }

 private:
  std::shared_ptr<const TabularPolicyClass> cls_;
  double lambda_;
  ContextCostTable table_;
  std::size_t current_ = 0;
};

class OnlineLinearLearner final : public PolicyLearner {
 public:
  OnlineLinearLearner(std::size_t k, std::size_t d, const LinearLearnerOptions& options,
                      std::span<const SupervisedExample> warm, double lambda, std::uint64_t seed)
      : lambda_(lambda), reg_(k, d, options.learning_rate) {
    if (!warm.empty() && lambda < 1.0) {
      reg_ = train_weighted(warm, {}, lambda, k, d, {options.warm_passes, options.learning_rate, seed});
    }
  }

  Action act(const Context& x) const override { return reg_.induced_action(x); }
  void observe(const BanditRecord& record) override { reg_.update_bandit(record.observation, lambda_); }

  Policy snapshot() const override {
    return [reg = reg_](const Context& x) { return reg.induced_action(x); };
  }

 private:
  double lambda_;
  LinearCostRegressor reg_;
};

class RetrainLinearLearner final : public PolicyLearner {
 public:
  RetrainLinearLearner(std::size_t k, std::size_t d, const LinearLearnerOptions& options,
                       std::span<const SupervisedExample> warm, double lambda, std::uint64_t seed)
      : k_(k), d_(d), options_(options), warm_(warm.begin(), warm.end()), lambda_(lambda), seed_(seed),
        reg_(k, d, options.learning_rate) {
    retrain(options_.warm_passes);
  }

  Action act(const Context& x) const override { return reg_.induced_action(x); }

  void observe(const BanditRecord& record) override {
    log_.push_back(record);
    retrain(options_.retrain_passes);
  }

  Policy snapshot() const override {
    return [reg = reg_](const Context& x) { return reg.induced_action(x); };
  }

 private:
  void retrain(std::size_t passes) {
    if (warm_.empty() && log_.empty()) return;
    reg_ = train_weighted(warm_, log_, lambda_, k_, d_, {passes, options_.learning_rate, seed_});
  }

  std::size_t k_;
  std::size_t d_;
  LinearLearnerOptions options_;
  std::vector<SupervisedExample> warm_;
  std::vector<BanditRecord> log_;
  double lambda_;
  std::uint64_t seed_;
  LinearCostRegressor reg_;
};

class ExactLinearLearner final : public PolicyLearner {
 public:
  ExactLinearLearner(std::size_t k, std::size_t d, double ridge, std::span<const SupervisedExample> warm,
                     double lambda)
      : lambda_(lambda), ls_(k, d, ridge) {
    for (const auto& ex : warm) ls_.add_supervised(ex, 1.0 - lambda);
  }

  Action act(const Context& x) const override { return ls_.induced_action(x); }
  void observe(const BanditRecord& record) override { ls_.add_bandit(record.observation, lambda_); }

  Policy snapshot() const override {
    return [reg = ls_.regressor()](const Context& x) { return reg.induced_action(x); };
  }

 private:
  double lambda_;
  WeightedLeastSquares ls_;
};

}  // namespace

LearnerFactory tabular_learner_factory(std::shared_ptr<const TabularPolicyClass> policy_class) {
  require(policy_class != nullptr, Errc::invalid_argument, "null policy class");
  return [cls = std::move(policy_class)](std::span<const SupervisedExample> warm, double lambda,
                                          std::uint64_t) -> std::unique_ptr<PolicyLearner> {
    return std::make_unique<TabularLearner>(cls, warm, lambda);
  };
}

LearnerFactory linear_learner_factory(std::size_t num_actions, std::size_t dimension, LinearLearnerOptions options) {
  require(options.warm_passes >= 1 && options.retrain_passes >= 1, Errc::invalid_argument,
          "passes must be at least 1");
  return [=](std::span<const SupervisedExample> warm, double lambda,
             std::uint64_t seed) -> std::unique_ptr<PolicyLearner> {
    require(lambda >= 0.0 && lambda <= 1.0, Errc::invalid_argument, "lambda outside [0, 1]");
    if (options.solver == LinearSolver::exact) {
      return std::make_unique<ExactLinearLearner>(num_actions, dimension, options.ridge, warm, lambda);
    }
    if (options.full_retrain) {
      return std::make_unique<RetrainLinearLearner>(num_actions, dimension, options, warm, lambda, seed);
    }
    return std::make_unique<OnlineLinearLearner>(num_actions, dimension, options, warm, lambda, seed);
  };
}

std::string lambda_key(double lambda) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, lambda);
  return std::string(buf, res.ptr);
}

std::uint64_t learner_seed(std::uint64_t base, double lambda) {
  return derive_seed(base, "learner|lambda=" + lambda_key(lambda));
}

}  // namespace warmcb
