#include <doctest.h>

#include <cmath>
#include <vector>

#include "warmcb/core.hpp"
#include "warmcb/error.hpp"
#include "warmcb/linear.hpp"
#include "warmcb/rng.hpp"

using namespace warmcb;

namespace {

Context random_context(std::size_t d, Rng& rng) {
  Context x;
  for (std::size_t j = 0; j < d; ++j) x.features.push_back(2 * rng.uniform() - 1);
  return x;
}

void randomize(LinearCostRegressor& reg, Rng& rng) {
  for (Action a = 0; a < reg.num_actions(); ++a) {
    for (double& w : reg.mutable_weights(a)) w = rng.normal() * 0.3;
  }
}

// Central finite difference of loss with respect to every weight of every action.
template <class Loss>
std::vector<std::vector<double>> numeric_gradient(LinearCostRegressor reg, Loss loss) {
  std::vector<std::vector<double>> g(reg.num_actions());
  const double h = 1e-6;
  for (Action a = 0; a < reg.num_actions(); ++a) {
    for (std::size_t j = 0; j <= reg.dimension(); ++j) {
      const double w0 = reg.weights(a)[j];
      reg.mutable_weights(a)[j] = w0 + h;
      const double up = loss(reg);
      reg.mutable_weights(a)[j] = w0 - h;
      const double down = loss(reg);
      reg.mutable_weights(a)[j] = w0;
      g[a].push_back((up - down) / (2 * h));
    }
  }
  return g;
}

}  // namespace

TEST_CASE("supervised update is a gradient step on the weighted squared loss") {
  Rng rng(3);
  const std::size_t k = 3, d = 4;
  const double lr = 0.01, weight = 0.7;
  for (int trial = 0; trial < 20; ++trial) {
    LinearCostRegressor reg(k, d, lr);
    randomize(reg, rng);
    const SupervisedExample ex{random_context(d, rng), CostVector({rng.uniform(), rng.uniform(), rng.uniform()})};
    const std::vector<SupervisedExample> one = {ex};
    const auto grad = numeric_gradient(reg, [&](const LinearCostRegressor& r) {
      return weight * weighted_objective(r, one, {}, 0.0);
    });
    LinearCostRegressor stepped = reg;
    stepped.update_supervised(ex, weight);
    for (Action a = 0; a < k; ++a) {
      for (std::size_t j = 0; j <= d; ++j) {
        CHECK(stepped.weights(a)[j] == doctest::Approx(reg.weights(a)[j] - lr * grad[a][j]).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("bandit update is an importance-weighted gradient step on one action") {
  Rng rng(4);
  const std::size_t k = 3, d = 2;
  const double lr = 0.01;
  LinearCostRegressor reg(k, d, lr);
  randomize(reg, rng);
  const BanditObservation obs{random_context(d, rng), 1, 0.4, 0.5};
  const std::vector<BanditRecord> one = {{obs, ips_estimate(obs, k)}};
  const auto grad = numeric_gradient(reg, [&](const LinearCostRegressor& r) { return weighted_objective(r, {}, one, 1.0); });
  LinearCostRegressor stepped = reg;
  stepped.update_bandit(obs, 1.0);
  for (Action a = 0; a < k; ++a) {
    for (std::size_t j = 0; j <= d; ++j) {
      CHECK(stepped.weights(a)[j] == doctest::Approx(reg.weights(a)[j] - lr * grad[a][j]).epsilon(1e-6));
    }
  }
  CHECK(stepped.weights(0)[0] == reg.weights(0)[0]);
}

TEST_CASE("oversized steps land exactly on the target") {
  LinearCostRegressor reg(2, 2, 0.5);
  const BanditObservation obs{Context{{1.0, -1.0}, {}}, 0, 1.0, 0.01};
  reg.update_bandit(obs, 1.0);
  CHECK(reg.predict_cost(obs.context, 0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::isfinite(reg.weights(0)[0]));
}

TEST_CASE("induced action is the smallest prediction, lowest index on ties") {
  LinearCostRegressor reg(3, 1);
  const Context x{{1.0}, {}};
  CHECK(reg.induced_action(x) == 0);
  reg.mutable_weights(2)[1] = -0.5;
  CHECK(reg.induced_action(x) == 2);
}

TEST_CASE("dimension and argument checks") {
  LinearCostRegressor reg(2, 3);
  CHECK_THROWS_AS(reg.predict_cost(Context{{1.0}, {}}, 0), Error);
  CHECK_THROWS_AS(LinearCostRegressor(1, 3), Error);
  CHECK_THROWS_AS(LinearCostRegressor(2, 3, 0.0), Error);
  CHECK_THROWS_AS(train_weighted({}, {}, 0.5, 2, 3, {}), Error);
}

TEST_CASE("zero-weight sources leave the model untouched") {
  Rng rng(8);
  const std::size_t d = 2;
  const BanditObservation obs{random_context(d, rng), 1, 0.3, 0.5};
  const std::vector<BanditRecord> log = {{obs, ips_estimate(obs, 2)}};
  const auto reg = train_weighted({}, log, 0.0, 2, d, {1, 0.1, 5});
  CHECK(reg == LinearCostRegressor(2, d, 0.1));
}

TEST_CASE("training is deterministic given the seed") {
  Rng rng(9);
  std::vector<SupervisedExample> sup;
  for (int i = 0; i < 30; ++i) sup.push_back({random_context(3, rng), CostVector({rng.uniform(), rng.uniform()})});
  const auto a = train_weighted(sup, {}, 0.0, 2, 3, {3, 0.05, 11});
  const auto b = train_weighted(sup, {}, 0.0, 2, 3, {3, 0.05, 11});
  const auto c = train_weighted(sup, {}, 0.0, 2, 3, {3, 0.05, 12});
  CHECK(a == b);
  CHECK(!(a == c));
}

TEST_CASE("exact solver satisfies the ridge normal equations") {
  Rng rng(10);
  const std::size_t k = 2, d = 3;
  const double ridge = 1e-3;
  std::vector<SupervisedExample> sup;
  std::vector<BanditRecord> log;
  for (int i = 0; i < 40; ++i) sup.push_back({random_context(d, rng), CostVector({rng.uniform(), rng.uniform()})});
  for (int i = 0; i < 40; ++i) {
    const BanditObservation obs{random_context(d, rng), rng.uniform_index(k), rng.uniform(), 0.2 + 0.8 * rng.uniform()};
    log.push_back({obs, ips_estimate(obs, k)});
  }
  const SourceWeights w{0.3, 0.7};
  const auto reg = solve_weighted(sup, log, w, k, d, ridge);
  // Gradient of w_s * sup + w_b * bandit + ridge * |v|^2 vanishes at the solution.
  const auto grad = numeric_gradient(reg, [&](const LinearCostRegressor& r) {
    double penalty = 0.0;
    for (Action a = 0; a < k; ++a) {
      for (double v : r.weights(a)) penalty += v * v;
    }
    return w.supervised * weighted_objective(r, sup, {}, 0.0) + w.bandit * weighted_objective(r, {}, log, 1.0) +
           ridge * penalty;
  });
  for (const auto& row : grad) {
    for (double g : row) CHECK(std::abs(g) < 1e-6);
  }
}

TEST_CASE("exact solver recovers a noiseless linear cost model") {
  Rng rng(12);
  const std::size_t d = 4;
  WeightedLeastSquares wls(2, d, 1e-9);
  for (int i = 0; i < 200; ++i) {
    const Context x = random_context(d, rng);
    const double c0 = 0.5 + 0.1 * x.features[0];
    const double c1 = 0.5 - 0.2 * x.features[1];
    wls.add_supervised({x, CostVector({c0, c1})}, 1.0);
  }
  const auto reg = wls.regressor();
  CHECK(reg.weights(0)[0] == doctest::Approx(0.1).epsilon(1e-6));
  CHECK(reg.weights(1)[1] == doctest::Approx(-0.2).epsilon(1e-6));
  CHECK(reg.weights(1)[d] == doctest::Approx(0.5).epsilon(1e-6));
}
