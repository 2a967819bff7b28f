#include <doctest.h>

#include <vector>

#include "warmcb/error.hpp"
#include "warmcb/noise.hpp"
#include "warmcb/rng.hpp"

using namespace warmcb;

namespace {

// Pearson statistic of observed label counts against an exact law (cells with zero
// expected mass must be empty).
double chi_square(const std::vector<int>& counts, const std::vector<double>& probs, int n, bool& impossible_hit) {
  double chi2 = 0.0;
  for (std::size_t a = 0; a < counts.size(); ++a) {
    const double e = probs[a] * n;
    if (e == 0.0) {
      if (counts[a] != 0) impossible_hit = true;
      continue;
    }
    chi2 += (counts[a] - e) * (counts[a] - e) / e;
  }
  return chi2;
}

}  // namespace

TEST_CASE("noise model parsing and printing") {
  CHECK(parse_noise_model("noiseless") == NoiseModel{NoiseKind::noiseless, 0.0});
  CHECK(parse_noise_model("cyc:0.25") == NoiseModel{NoiseKind::cyc, 0.25});
  CHECK(parse_noise_model("maj:1") == NoiseModel{NoiseKind::maj, 1.0});
  CHECK(to_string(NoiseModel{NoiseKind::uar, 0.5}) == "uar:0.5");
  CHECK(parse_noise_model(to_string(NoiseModel{NoiseKind::cyc, 0.25})) == NoiseModel{NoiseKind::cyc, 0.25});
  CHECK_THROWS_AS(parse_noise_model("flip:0.5"), Error);
  CHECK_THROWS_AS(parse_noise_model("uar:1.5"), Error);
  CHECK_THROWS_AS(parse_noise_model("uar"), Error);
  CHECK(default_noise_grid().size() == 10);
}

TEST_CASE("bandit costs are zero-one") {
  CHECK(make_bandit_cost(1, 3) == CostVector({1.0, 0.0, 1.0}));
  CHECK_THROWS_AS(make_bandit_cost(3, 3), Error);
}

TEST_CASE("corrupted label frequencies match the exact laws") {
  const std::size_t k = 4, label = 1, majority = 3;
  const int n = 100000;
  for (const auto kind : {NoiseKind::uar, NoiseKind::cyc, NoiseKind::maj}) {
    for (double p : {0.25, 0.5, 1.0}) {
      Rng rng(static_cast<std::uint64_t>(p * 100) + static_cast<std::uint64_t>(kind));
      std::vector<int> counts(k, 0);
      for (int i = 0; i < n; ++i) ++counts[corrupt_label(label, {kind, p}, majority, k, rng)];
      std::vector<double> law(k, 0.0);
      law[label] += 1 - p;
      if (kind == NoiseKind::uar) {
        for (auto& v : law) v += p / k;
      } else if (kind == NoiseKind::cyc) {
        law[(label + 1) % k] += p;
      } else {
        law[majority] += p;
      }
      bool impossible = false;
      // 3 degrees of freedom at most; 16.27 is the 0.999 quantile.
      CHECK(chi_square(counts, law, n, impossible) < 16.27);
      CHECK_FALSE(impossible);
    }
  }
}

TEST_CASE("one coin per call regardless of kind") {
  for (const auto kind : {NoiseKind::noiseless, NoiseKind::cyc, NoiseKind::maj}) {
    Rng a(3), b(3);
    corrupt_label(0, {kind, 0.5}, 1, 3, a);
    b.uniform();
    CHECK(a.next_u64() == b.next_u64());
  }
}

TEST_CASE("noiseless and p = 0 leave labels alone") {
  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    CHECK(corrupt_label(2, {NoiseKind::noiseless, 0.0}, 0, 3, rng) == 2);
    CHECK(corrupt_label(2, {NoiseKind::cyc, 0.0}, 0, 3, rng) == 2);
  }
  CHECK(corrupt(0, {NoiseKind::cyc, 1.0}, 0, 3, rng) == CostVector({1.0, 0.0, 1.0}));
}
