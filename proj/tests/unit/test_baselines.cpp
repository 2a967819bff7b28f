#include <doctest.h>

#include <chrono>
#include <cmath>
#include <memory>
#include <vector>

#include "warmcb/arrow.hpp"
#include "warmcb/baselines.hpp"
#include "warmcb/error.hpp"
#include "warmcb/rng.hpp"

using namespace warmcb;

namespace {

std::vector<double> zero_one(std::size_t y, std::size_t k) {
  std::vector<double> c(k, 1.0);
  c[y] = 0.0;
  return c;
}

std::vector<InteractionRound> stream_of(std::size_t n, std::size_t n_ctx, std::size_t k, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<InteractionRound> s;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t x = rng.uniform_index(n_ctx);
    s.push_back({{{static_cast<double>(x)}, x}, CostVector(zero_one(x % k, k))});
  }
  return s;
}

LearnerFactory tabular(std::size_t n_ctx, std::size_t k) {
  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < n_ctx; ++i) ids.push_back(i);
  return tabular_learner_factory(std::make_shared<const TabularPolicyClass>(enumerate_full_class(ids, k)));
}

void check_identical(const Trajectory& a, const Trajectory& b) {
  REQUIRE(a.size() == b.size());
  for (std::size_t t = 0; t < a.size(); ++t) {
    CHECK(a.rounds[t].action == b.rounds[t].action);
    CHECK(a.rounds[t].cost == b.rounds[t].cost);
    CHECK(a.rounds[t].propensity == b.rounds[t].propensity);
    CHECK(a.rounds[t].probs == b.rounds[t].probs);
    CHECK(a.rounds[t].context_index == b.rounds[t].context_index);
  }
}

}  // namespace

TEST_CASE("bandit-only explores uniformly at round one, epsilon-greedy after") {
  const auto s = stream_of(30, 3, 3, 1);
  const auto traj = run_bandit_only(s, {0.3, 5}, tabular(3, 3));
  CHECK(traj.rounds[0].probs == std::vector<double>(3, 1.0 / 3));
  for (std::size_t t = 1; t < traj.size(); ++t) {
    const auto& p = traj.rounds[t].probs;
    CHECK(*std::max_element(p.begin(), p.end()) == doctest::Approx(0.7 + 0.1));
  }
}

TEST_CASE("bandit-only, ARRoW with lambda one and sim-bandit without warm start coincide") {
  const auto s = stream_of(60, 3, 2, 2);
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto bandit = run_bandit_only(s, {0.2, seed}, tabular(3, 2));
    check_identical(bandit, run_arrow({}, s, LambdaGrid({1.0}), {0.2, ExplorationBase::last_policy, seed},
                                      tabular(3, 2)).trajectory);
    check_identical(bandit, run_sim_bandit({}, s, {0.2, seed}, tabular(3, 2)));
  }
}

TEST_CASE("sup-only plays the warm-start policy with propensity one") {
  const auto s = stream_of(20, 2, 2, 3);
  std::vector<SupervisedExample> warm = {{{{0.0}, 0}, CostVector({1.0, 0.0})}, {{{1.0}, 1}, CostVector({1.0, 0.0})}};
  const auto traj = run_sup_only(warm, s, tabular(2, 2), 0);
  for (const auto& r : traj.rounds) {
    CHECK(r.action == 1);
    CHECK(r.propensity == 1.0);
  }
  CHECK_THROWS_AS(run_sup_only({}, s, tabular(2, 2), 0), Error);
}

TEST_CASE("majority baseline") {
  const std::vector<std::size_t> labels = {2, 1, 2, 1, 0};
  CHECK(majority_label(labels, 3) == 1);
  const auto s = stream_of(10, 3, 3, 4);
  for (const auto& r : run_majority(labels, s).rounds) CHECK(r.action == 1);
  CHECK_THROWS_AS(majority_label(std::vector<std::size_t>{}, 3), Error);
  CHECK_THROWS_AS(majority_label(std::vector<std::size_t>{5}, 3), Error);
}

TEST_CASE("sim-bandit consumes the warm start as unreported rounds") {
  const auto s = stream_of(20, 2, 2, 5);
  std::vector<SupervisedExample> warm = {{{{0.0}, 0}, CostVector({0.0, 1.0})}};
  const auto traj = run_sim_bandit(warm, s, {0.1, 1}, tabular(2, 2));
  CHECK(traj.size() == s.size());
  // The first reported round is the second played round, so it is not uniform.
  CHECK(traj.rounds[0].probs != std::vector<double>{0.5, 0.5});
}

TEST_CASE("warm-started UCB with a shifted source waits exponentially long") {
  const auto start = std::chrono::steady_clock::now();
  const auto r = run_ucb_warmstart(0.4, 1000, 200000);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(r.first_arm2_round >= 22026);
  CHECK(r.first_arm2_round <= 200000);
  CHECK(r.regret_at_first_play >= 0.2 * static_cast<double>(r.first_arm2_round - 1) - 1e-9);
  CHECK(r.inequality_held);
  CHECK(secs < 1.0);
}

TEST_CASE("UCB without a warm start pulls arm two at round two") {
  const auto r = run_ucb_warmstart(0.4, 0, 100);
  CHECK(r.first_arm2_round == 2);
  CHECK(r.regret_at_first_play == doctest::Approx(0.2));
}

TEST_CASE("UCB with the shifted logarithm still starts late") {
  const auto plain = run_ucb_warmstart(0.4, 200, 100000);
  const auto shifted = run_ucb_warmstart(0.4, 200, 100000, {true});
  CHECK(shifted.first_arm2_round <= plain.first_arm2_round);
  CHECK(shifted.first_arm2_round > 1);
  CHECK_THROWS_AS(run_ucb_warmstart(0.0, 10, 10), Error);
  CHECK_THROWS_AS(run_ucb_warmstart(0.4, 10, 0), Error);
}
