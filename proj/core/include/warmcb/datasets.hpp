#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "warmcb/noise.hpp"
#include "warmcb/trajectory.hpp"
#include "warmcb/types.hpp"

namespace warmcb {

// Context i carries id i. Labels are dense in [0, K); original_labels[k] is the raw
// value that was mapped to k.
struct MulticlassDataset {
  std::string name;
  std::vector<Context> contexts;
  std::vector<std::size_t> labels;
  std::size_t num_actions = 0;
  std::size_t dimension = 0;
  std::vector<long long> original_labels;

  std::size_t size() const noexcept { return labels.size(); }
};

// Header row required; every column except label_column is a numeric feature.
MulticlassDataset load_csv(const std::filesystem::path& path, const std::string& label_column = "label");

void save_csv(const MulticlassDataset& dataset, const std::filesystem::path& path);

// Contexts uniform on [-1, 1]^d, label = argmax of K fixed random linear scorers
// (orthonormal when K <= d), replaced by a uniform label with probability label_noise.
MulticlassDataset synth_linear(std::size_t n, std::size_t d, std::size_t num_actions, double label_noise,
                               std::uint64_t seed);

struct SplitSpec {
  std::size_t ns = 0;
  std::size_t nb = 0;
  std::uint64_t seed = 0;
};

struct DatasetSplit {
  std::vector<std::size_t> warm;
  std::vector<std::size_t> interaction;
};

// One seeded shuffle of all indices; the first ns are the warm start, the next nb the
// interaction stream.
DatasetSplit split(const MulticlassDataset& dataset, const SplitSpec& spec);

// round(fraction * n).
std::size_t count_from_fraction(std::size_t n, double fraction);

inline constexpr std::size_t kDefaultWarmStartFloor = 100;

// Warm-start examples with corrupted supervised costs.
std::vector<SupervisedExample> make_warm_start(const MulticlassDataset& dataset, const std::vector<std::size_t>& indices,
                                               const NoiseModel& noise, std::size_t majority, std::uint64_t seed);

// Interaction rounds with the true zero-one costs.
std::vector<InteractionRound> make_interaction(const MulticlassDataset& dataset,
                                               const std::vector<std::size_t>& indices);

struct SkylineOptions {
  bool exact = false;
  double ridge = 1e-3;
  double learning_rate = 0.01;
  std::size_t passes = 20;
  std::uint64_t seed = 0;
};

// Training error of the linear one-vs-all regressor fit on every example.
double skyline_error(const MulticlassDataset& dataset, const SkylineOptions& options = {});

}  // namespace warmcb
