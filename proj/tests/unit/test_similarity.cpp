#include <doctest.h>

#include <cmath>
#include <vector>

#include "warmcb/error.hpp"
#include "warmcb/rng.hpp"
#include "warmcb/similarity.hpp"

using namespace warmcb;

namespace {

LabelDistribution random_labels(std::size_t n_ctx, std::size_t k, Rng& rng) {
  LabelDistribution d{k, {}};
  for (std::size_t i = 0; i < n_ctx; ++i) {
    std::vector<double> q(k);
    double s = 0.0;
    for (auto& v : q) s += (v = 0.05 + rng.uniform());
    for (auto& v : q) v /= s;
    d.contexts.push_back({1.0 / n_ctx, q});
  }
  return d;
}

TabularPolicyClass full_class(std::size_t n_ctx, std::size_t k) {
  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < n_ctx; ++i) ids.push_back(i);
  return enumerate_full_class(ids, k);
}

}  // namespace

TEST_CASE("zero-one costs from a label law") {
  const LabelDistribution labels{2, {{0.5, {0.8, 0.2}}, {0.5, {0.1, 0.9}}}};
  const auto d = from_labels(labels);
  CHECK(d.expected_cost(0, 0) == doctest::Approx(0.2));
  CHECK(d.expected_cost(1, 0) == doctest::Approx(0.9));
  const auto cls = full_class(2, 2);
  // Optimal: action 0 on context 0, action 1 on context 1 -> policy {0, 1} = index 1.
  CHECK(optimal_policy(d, cls) == 1);
  CHECK(policy_cost(d, cls.policy(1)) == doctest::Approx(0.5 * 0.2 + 0.5 * 0.1));
  CHECK(excess_cost(d, cls.policy(0), cls.policy(1)) == doctest::Approx(0.5 * (0.9 - 0.1)));
}

TEST_CASE("exact corruption laws sum to one") {
  Rng rng(2);
  const auto labels = random_labels(5, 4, rng);
  for (auto kind : {NoiseKind::uar, NoiseKind::cyc, NoiseKind::maj}) {
    const auto c = corrupt_exact(labels, {kind, 0.3}, majority_label(labels));
    for (const auto& e : c.contexts) {
      double s = 0.0;
      for (double v : e.label_probs) s += v;
      CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("uniform relabeling shrinks excess cost by exactly 1 - p") {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto labels = random_labels(3, 3, rng);
    const auto cls = full_class(3, 3);
    for (double p : {0.25, 0.5, 0.9}) {
      const auto d1 = from_labels(labels);
      const auto d2 = from_labels(corrupt_exact(labels, {NoiseKind::uar, p}, 0));
      const auto& star = cls.policy(optimal_policy(d1, cls));
      for (std::size_t i = 0; i < cls.size(); ++i) {
        CHECK(excess_cost(d2, cls.policy(i), star) ==
              doctest::Approx((1 - p) * excess_cost(d1, cls.policy(i), star)).epsilon(1e-12));
      }
      CHECK(check_similarity(d1, d2, cls, {1 - p, 0.0}));
      CHECK(min_delta_for_alpha(d1, d2, cls, 1 - p) <= 1e-12);
    }
  }
}

TEST_CASE("general corruption is (1, 2p)-similar") {
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto labels = random_labels(3, 3, rng);
    const auto cls = full_class(3, 3);
    const auto d1 = from_labels(labels);
    for (auto kind : {NoiseKind::cyc, NoiseKind::maj}) {
      for (double p : {0.25, 0.5, 1.0}) {
        const auto d2 = from_labels(corrupt_exact(labels, {kind, p}, majority_label(labels)));
        CHECK(min_delta_for_alpha(d1, d2, cls, 1.0) <= 2 * p + 1e-12);
        CHECK(check_similarity(d1, d2, cls, {1.0, 2 * p}));
      }
    }
  }
}

TEST_CASE("identical sources are (1, 0)-similar and detection of dissimilarity") {
  const auto d = FiniteCostDistribution::from_expected(2, {0.5, 0.5}, {{0.2, 0.8}, {0.7, 0.3}});
  const auto flipped = FiniteCostDistribution::from_expected(2, {0.5, 0.5}, {{0.8, 0.2}, {0.3, 0.7}});
  const auto cls = full_class(2, 2);
  CHECK(check_similarity(d, d, cls, {1.0, 0.0}));
  CHECK_FALSE(check_similarity(d, flipped, cls, {1.0, 0.0}));
  // Excess under d of the all-wrong policy is 0.5; under flipped it is -0.5.
  CHECK(min_delta_for_alpha(d, flipped, cls, 1.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(check_similarity(d, d, cls, {1.0, -0.1}), Error);
  CHECK_THROWS_AS(min_delta_for_alpha(d, d, cls, 0.0), Error);
}

TEST_CASE("lowest-cost labelling") {
  // One context, two equally likely cost vectors.
  FiniteCostDistribution d(2, {{1.0, {{0.5, {0.1, 0.6}}, {0.5, {0.9, 0.4}}}}});
  const auto cls = full_class(1, 2);
  CHECK(d.expected_cost(0, 0) == doctest::Approx(0.5));
  const auto labelled = label_lowest_cost(d);
  CHECK(labelled.expected_cost(0, 0) == doctest::Approx(0.5));
  CHECK(labelled.expected_cost(0, 1) == doctest::Approx(0.5));
  // pi* picks action 0 (ties to the lowest); it is not the unique cheapest half the time.
  CHECK(lowest_cost_label_delta(d, cls) == doctest::Approx(1.0));
}

TEST_CASE("distribution validation") {
  CHECK_THROWS_AS(FiniteCostDistribution::from_expected(2, {0.5, 0.6}, {{0.2, 0.8}, {0.7, 0.3}}), Error);
  CHECK_THROWS_AS(FiniteCostDistribution::from_expected(2, {1.0}, {{0.2}}), Error);
}
