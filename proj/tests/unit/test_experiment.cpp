#include <doctest.h>

#include <string>

#include "warmcb/baselines.hpp"
#include "warmcb/error.hpp"
#include "warmcb/experiment.hpp"
#include "warmcb/log.hpp"

using namespace warmcb;

namespace {

const PreparedDataset& small_dataset() {
  static const PreparedDataset ds = prepare_dataset(synth_linear(600, 4, 3, 0.0, 1));
  return ds;
}

}  // namespace

TEST_CASE("algorithm names") {
  for (Algorithm a : all_algorithms()) CHECK(parse_algorithm(to_string(a)) == a);
  CHECK(benchmark_algorithms().size() == 6);
  try {
    parse_algorithm("ucb");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
    CHECK(std::string(e.what()).find("arrow-2") != std::string::npos);
  }
}

TEST_CASE("cells are reproducible and share splits across noise models") {
  const auto& ds = small_dataset();
  const Condition clean{50, 200, {}, 0.0125, 0};
  const Condition noisy{50, 200, {NoiseKind::cyc, 1.0}, 0.0125, 0};
  const auto a = prepare_cell(ds, clean, 7);
  const auto b = prepare_cell(ds, clean, 7);
  const auto c = prepare_cell(ds, noisy, 7);
  CHECK(a.labels == b.labels);
  CHECK(a.action_seed == b.action_seed);
  CHECK(a.labels == c.labels);
  CHECK(a.action_seed != c.action_seed);
  for (std::size_t i = 0; i < a.warm.size(); ++i) {
    CHECK(a.warm[i].context.features == c.warm[i].context.features);
    CHECK(a.warm[i].costs != c.warm[i].costs);
  }
  const auto d = prepare_cell(ds, {50, 200, {}, 0.0125, 1}, 7);
  CHECK(d.labels != a.labels);
}

TEST_CASE("every algorithm runs on a cell and majority is exact") {
  const auto& ds = small_dataset();
  const auto cell = prepare_cell(ds, {40, 120, {NoiseKind::uar, 0.5}, 0.1, 0}, 1);
  LearnerSettings gd;
  LearnerSettings exact;
  exact.solver = LinearSolver::exact;
  for (Algorithm a : all_algorithms()) {
    for (const auto& settings : {gd, exact}) {
      const double c = run_algorithm(a, cell, 3, 4, 0.1, settings);
      CHECK((c >= 0.0 && c <= 1.0));
    }
  }
  std::size_t wrong = 0;
  const std::size_t maj = majority_label(cell.labels, 3);
  for (const auto& r : cell.stream) wrong += r.costs[maj] == 1.0;
  CHECK(run_algorithm(Algorithm::majority, cell, 3, 4, 0.1, gd) == doctest::Approx(double(wrong) / cell.stream.size()));
}

TEST_CASE("learning-rate grid mode keeps the best rate") {
  const auto& ds = small_dataset();
  const auto cell = prepare_cell(ds, {40, 120, {}, 0.1, 0}, 1);
  LearnerSettings fixed;
  LearnerSettings grid;
  grid.lr_mode = LearningRateMode::grid;
  CHECK(run_algorithm(Algorithm::bandit_only, cell, 3, 4, 0.1, grid) <=
        run_algorithm(Algorithm::bandit_only, cell, 3, 4, 0.1, fixed));
}

TEST_CASE("conditions below the warm-start floor are skipped") {
  const auto& ds = small_dataset();
  SweepConfig cfg;
  cfg.algorithms = {Algorithm::arrow, Algorithm::majority};
  const auto rs = run_condition(ds, {20, 100, {}, 0.0125, 0}, cfg);
  REQUIRE(rs.size() == 2);
  for (const auto& r : rs) CHECK(r.status == RecordStatus::skipped);
  cfg.warm_floor = 0;
  for (const auto& r : run_condition(ds, {20, 100, {}, 0.0125, 0}, cfg)) CHECK(r.status == RecordStatus::ok);
}

TEST_CASE("failing cells become error records") {
  auto previous = set_warning_sink([](std::string_view) {});
  const auto& ds = small_dataset();
  SweepConfig cfg;
  cfg.warm_floor = 0;
  cfg.algorithms = {Algorithm::majority};
  const auto rs = run_condition(ds, {500, 500, {}, 0.0125, 0}, cfg);
  set_warning_sink(previous);
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].status == RecordStatus::error);
}

TEST_CASE("sweeps are normalized, sorted and independent of thread count") {
  const std::vector<PreparedDataset> dss = {small_dataset()};
  SweepConfig cfg;
  cfg.ns_fractions = {0.1};
  cfg.nb_fractions = {0.3, 0.5};
  cfg.noise = {{}, {NoiseKind::maj, 0.5}};
  cfg.algorithms = {Algorithm::bandit_only, Algorithm::sup_only, Algorithm::majority};
  cfg.num_seeds = 2;
  cfg.warm_floor = 10;
  cfg.threads = 1;
  const auto one = run_sweep(dss, cfg);
  cfg.threads = 3;
  const auto three = run_sweep(dss, cfg);
  REQUIRE(one.size() == 2 * 2 * 3 * 2);
  REQUIRE(three.size() == one.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].algorithm == three[i].algorithm);
    CHECK(one[i].avg_cost == three[i].avg_cost);
    CHECK(one[i].normalized_error == three[i].normalized_error);
    REQUIRE(one[i].normalized_error.has_value());
    CHECK(*one[i].normalized_error <= 1.0);
  }
  CHECK(one.front().algorithm == "bandit-only");
  CHECK(one.front().ratio == doctest::Approx(3.0));
}
