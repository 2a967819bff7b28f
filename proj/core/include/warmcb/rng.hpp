#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace warmcb {

// Portable random stream. std::mt19937_64 is fully specified by the standard; the
// conversions below are hand-rolled because the standard distributions are not,
// so a given seed yields the same draws on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform();

  // Uniform on {0, ..., n-1}; n must be positive.
  std::size_t uniform_index(std::size_t n);

  // Standard normal via Box-Muller (one variate per call).
  double normal();

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = uniform_index(i);
      using std::swap;
      swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Stable seed derivation: a pure function of (base, key), independent of platform
// and of the order in which callers ask for seeds.
std::uint64_t derive_seed(std::uint64_t base, std::string_view key);

}  // namespace warmcb
