#include <doctest.h>

#include <memory>
#include <vector>

#include "oracles.hpp"
#include "warmcb/core.hpp"
#include "warmcb/error.hpp"
#include "warmcb/rng.hpp"
#include "warmcb/supgt.hpp"

using namespace warmcb;

namespace {

std::vector<double> zero_one(std::size_t y, std::size_t k) {
  std::vector<double> c(k, 1.0);
  c[y] = 0.0;
  return c;
}

SupervisedExample example(std::size_t x, std::size_t y, std::size_t k) {
  return {{{static_cast<double>(x)}, x}, CostVector(zero_one(y, k))};
}

}  // namespace

TEST_CASE("epoch schedule doubles and is capped at nb") {
  auto s = epoch_schedule(5);
  CHECK(s.num_epochs == 3);
  CHECK(s.boundaries == std::vector<std::size_t>{0, 2, 4, 5});
  s = epoch_schedule(2);
  CHECK(s.num_epochs == 1);
  CHECK(s.boundaries == std::vector<std::size_t>{0, 2});
  s = epoch_schedule(1024);
  CHECK(s.num_epochs == 10);
  CHECK(s.boundaries.back() == 1024);
  CHECK_THROWS_AS(epoch_schedule(1), Error);
}

TEST_CASE("supervised data is split in order into equal parts") {
  std::vector<SupervisedExample> data;
  for (std::size_t i = 0; i < 11; ++i) data.push_back(example(i, 0, 2));
  const auto parts = partition_supervised(data, 2);
  REQUIRE(parts.train.size() == 3);
  REQUIRE(parts.validation.size() == 2);
  CHECK(*parts.train[0].context.id == 0);
  CHECK(*parts.validation[0][0].context.id == 3);
  CHECK(*parts.validation[1][2].context.id == 8);
  try {
    partition_supervised(std::vector<SupervisedExample>(data.begin(), data.begin() + 2), 2);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::too_few_examples);
  }
}

TEST_CASE("epoch learner matches the hand-stepped reference") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Rng rng(seed);
    const std::size_t n_ctx = 2 + seed % 2, k = 2 + seed % 2;
    const std::size_t nb = 5 + rng.uniform_index(30);
    std::vector<SupervisedExample> sup;
    for (std::size_t i = 0; i < 30; ++i) {
      const std::size_t x = rng.uniform_index(n_ctx);
      sup.push_back(example(x, rng.uniform() < 0.6 ? x % k : rng.uniform_index(k), k));
    }
    std::vector<InteractionRound> stream;
    for (std::size_t i = 0; i < nb; ++i) {
      const std::size_t x = rng.uniform_index(n_ctx);
      stream.push_back({{{static_cast<double>(x)}, x}, CostVector(zero_one(rng.uniform() < 0.7 ? x % k : 0, k))});
    }
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < n_ctx; ++i) ids.push_back(i);
    auto cls = std::make_shared<const TabularPolicyClass>(enumerate_full_class(ids, k));
    const std::vector<double> grid = {0.0, 0.3, 0.7, 1.0};
    const auto res = run_supgt(sup, stream, LambdaGrid(grid), {0.25, seed}, tabular_epoch_trainer(cls));
    const auto expected = oracle::supgt(sup, stream, grid, n_ctx, k, 0.25, seed);
    REQUIRE(res.epochs.size() == expected.size());
    for (std::size_t e = 0; e < expected.size(); ++e) {
      CHECK(res.epochs[e].epoch == e + 1);
      CHECK(res.epochs[e].lambda == expected[e].lambda);
      REQUIRE(res.epochs[e].policy_index.has_value());
      CHECK(cls->policy(*res.epochs[e].policy_index).assignment == expected[e].policy);
    }
    CHECK(res.trajectory.size() == nb);
  }
}

TEST_CASE("first epoch plays uniformly, later epochs explore around the anchor") {
  std::vector<SupervisedExample> sup;
  for (std::size_t i = 0; i < 12; ++i) sup.push_back(example(i % 2, i % 2, 2));
  std::vector<InteractionRound> stream;
  for (std::size_t i = 0; i < 8; ++i) stream.push_back({{{double(i % 2)}, i % 2}, CostVector(zero_one(i % 2, 2))});
  auto cls = std::make_shared<const TabularPolicyClass>(enumerate_full_class({0, 1}, 2));
  const auto res = run_supgt(sup, stream, LambdaGrid({0.0, 1.0}), {0.1, 3}, tabular_epoch_trainer(cls));
  CHECK(res.trajectory.rounds[0].probs == std::vector<double>{0.5, 0.5});
  CHECK(res.trajectory.rounds[1].probs == std::vector<double>{0.5, 0.5});
  for (std::size_t t = 2; t < 8; ++t) {
    const auto& p = res.trajectory.rounds[t].probs;
    CHECK(std::max(p[0], p[1]) == doctest::Approx(0.95));
  }
}

TEST_CASE("linear epoch trainer uses averaged source weights") {
  Rng rng(4);
  const std::size_t k = 2, d = 2;
  std::vector<SupervisedExample> train;
  std::vector<BanditRecord> log;
  for (int i = 0; i < 12; ++i) {
    Context x{{rng.uniform(), rng.uniform()}, {}};
    train.push_back({x, CostVector({rng.uniform(), rng.uniform()})});
  }
  for (int i = 0; i < 7; ++i) {
    const BanditObservation obs{{{rng.uniform(), rng.uniform()}, {}}, rng.uniform_index(k), rng.uniform(), 0.5};
    log.push_back({obs, ips_estimate(obs, k)});
  }
  LinearLearnerOptions opts;
  opts.solver = LinearSolver::exact;
  const auto trained = linear_epoch_trainer(k, d, opts)(log, train, 0.25, 0);
  const double n = 19.0;
  const auto reg = solve_weighted(train, log, {0.75 / 12 * n, 0.25 / 7 * n}, k, d, opts.ridge);
  for (int i = 0; i < 50; ++i) {
    const Context x{{2 * rng.uniform() - 1, 2 * rng.uniform() - 1}, {}};
    CHECK(trained.policy(x) == reg.induced_action(x));
  }
  CHECK_FALSE(trained.index.has_value());
}
