#include <benchmark/benchmark.h>

#include <memory>
#include <vector>

#include "warmcb/arrow.hpp"
#include "warmcb/bounds.hpp"
#include "warmcb/core.hpp"
#include "warmcb/datasets.hpp"
#include "warmcb/learner.hpp"
#include "warmcb/tabular.hpp"

using namespace warmcb;

namespace {

struct LinearSetup {
  std::vector<SupervisedExample> warm;
  std::vector<InteractionRound> stream;
};

LinearSetup linear_setup(std::size_t k, std::size_t d, std::size_t rounds) {
  const auto data = synth_linear(100 + rounds, d, k, 0.0, 7);
  std::vector<std::size_t> warm_idx, stream_idx;
  for (std::size_t i = 0; i < 100; ++i) warm_idx.push_back(i);
  for (std::size_t i = 100; i < 100 + rounds; ++i) stream_idx.push_back(i);
  return {make_warm_start(data, warm_idx, {}, 0, 7), make_interaction(data, stream_idx)};
}

void BM_ArrowLinear(benchmark::State& state) {
  const std::size_t k = state.range(0);
  const auto setup = linear_setup(k, 10, 500);
  const auto grid = default_lambda_grid(0.0125, k);
  for (auto _ : state) {
    auto r = run_arrow(setup.warm, setup.stream, grid, {0.0125, ExplorationBase::last_policy, 1},
                       linear_learner_factory(k, 10));
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(setup.stream.size()));
}
BENCHMARK(BM_ArrowLinear)->Arg(2)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_WeightedErm(benchmark::State& state) {
  const std::size_t n_ctx = state.range(0), k = 3;
  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < n_ctx; ++i) ids.push_back(i);
  const auto cls = enumerate_full_class(ids, k);
  Rng rng(3);
  std::vector<SupervisedExample> sup;
  std::vector<BanditRecord> log;
  for (int i = 0; i < 200; ++i) {
    const std::size_t x = rng.uniform_index(n_ctx);
    std::vector<double> c(k);
    for (auto& v : c) v = rng.uniform();
    sup.push_back({Context{{static_cast<double>(x)}, x}, CostVector(c)});
    const BanditObservation obs{Context{{static_cast<double>(x)}, x}, rng.uniform_index(k), rng.uniform(), 1.0 / 3.0};
    log.push_back({obs, ips_estimate(obs, k)});
  }
  for (auto _ : state) benchmark::DoNotOptimize(weighted_erm(cls, log, sup, 0.5));
  state.counters["policies"] = static_cast<double>(cls.size());
}
BENCHMARK(BM_WeightedErm)->Arg(4)->Arg(6)->Arg(8);

void BM_ArrowRegretBound(benchmark::State& state) {
  const BoundParams p{5, 0.0125, 500, static_cast<std::size_t>(state.range(0)), 1e6, 0.05};
  const auto grid = default_lambda_grid(0.0125, 5);
  for (auto _ : state) benchmark::DoNotOptimize(arrow_regret_bound(p, 0.8, 0.1, grid.values()));
}
BENCHMARK(BM_ArrowRegretBound)->Arg(1000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
