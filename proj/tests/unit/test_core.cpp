#include <doctest.h>

#include <cmath>
#include <vector>

#include "warmcb/core.hpp"
#include "warmcb/error.hpp"

using namespace warmcb;

TEST_CASE("ips places cost over propensity at the chosen action") {
  const BanditObservation obs{{{0.0}, 0}, 2, 0.5, 0.25};
  const IpsCostVector v = ips_estimate(obs, 4);
  CHECK(v.costs == std::vector<double>{0.0, 0.0, 2.0, 0.0});
  CHECK(v.source_action == 2);
  CHECK(v.source_propensity == 0.25);
}

TEST_CASE("ips rejects bad propensities and costs") {
  CHECK_THROWS_AS(ips_estimate({{}, 0, 0.5, 0.0}, 2), Error);
  CHECK_THROWS_AS(ips_estimate({{}, 0, 0.5, 1.5}, 2), Error);
  CHECK_THROWS_AS(ips_estimate({{}, 0, 1.5, 0.5}, 2), Error);
  CHECK_THROWS_AS(ips_estimate({{}, 3, 0.5, 0.5}, 2), Error);
  try {
    ips_estimate({{}, 0, 0.5, 0.0}, 2);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_propensity);
  }
}

TEST_CASE("ips is unbiased in exact expectation") {
  // E_a~p[ips(a)[b]] = p(b) * c(b) / p(b) = c(b) for every b with p(b) > 0.
  const std::vector<double> p = {0.1, 0.6, 0.3};
  const std::vector<double> c = {0.9, 0.2, 0.5};
  for (std::size_t b = 0; b < 3; ++b) {
    double expectation = 0.0;
    for (std::size_t a = 0; a < 3; ++a) {
      expectation += p[a] * ips_estimate({{}, a, c[a], p[a]}, 3)[b];
    }
    CHECK(expectation == doctest::Approx(c[b]).epsilon(1e-14));
  }
}

TEST_CASE("epsilon greedy mix") {
  const auto d = epsilon_greedy_mix(ActionDistribution::point_mass(4, 1), 0.2);
  CHECK(d[0] == doctest::Approx(0.05));
  CHECK(d[1] == doctest::Approx(0.85));
  CHECK(epsilon_greedy_mix(ActionDistribution::uniform(3), 0.5) == ActionDistribution::uniform(3));
  CHECK_THROWS_AS(epsilon_greedy_mix(ActionDistribution::uniform(3), 1.5), Error);
}

TEST_CASE("action distributions validate") {
  CHECK_THROWS_AS(ActionDistribution({0.5, 0.4}), Error);
  CHECK_THROWS_AS(ActionDistribution({1.2, -0.2}), Error);
  CHECK_NOTHROW(ActionDistribution({0.25, 0.75}));
}

TEST_CASE("sample_action follows the distribution and reports its propensity") {
  Rng rng(1);
  const ActionDistribution d({0.2, 0.0, 0.8});
  int counts[3] = {0, 0, 0};
  for (int i = 0; i < 50000; ++i) {
    const auto s = sample_action(d, rng);
    CHECK(s.propensity == d[s.action]);
    ++counts[s.action];
  }
  CHECK(counts[1] == 0);
  CHECK(counts[0] / 50000.0 == doctest::Approx(0.2).epsilon(0.05));
}

TEST_CASE("sample_action uses exactly one uniform draw") {
  Rng a(9), b(9);
  sample_action(ActionDistribution::uniform(5), a);
  b.uniform();
  CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("argmin ties go to the lowest index") {
  const std::vector<double> v = {3.0, 1.0, 1.0, 2.0};
  CHECK(argmin_index(v) == 1);
  CHECK_THROWS_AS(argmin_index(std::vector<double>{}), Error);
}

TEST_CASE("empirical cost") {
  std::vector<SupervisedExample> data = {{{{0.0}, 0}, CostVector({0.0, 1.0})}, {{{1.0}, 1}, CostVector({1.0, 0.0})}};
  CHECK(empirical_cost([](const Context&) { return Action{0}; }, data) == 0.5);
  CHECK(empirical_cost([](const Context& x) { return Action(*x.id); }, data) == 0.0);
  CHECK_THROWS_AS(empirical_cost([](const Context&) { return Action{0}; }, std::vector<SupervisedExample>{}), Error);
}

TEST_CASE("cost vectors must lie in [0, 1]") {
  CHECK_THROWS_AS(CostVector({0.0, 1.5}), Error);
  CHECK_THROWS_AS(CostVector({0.5}), Error);
}
