#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "warmcb/bounds.hpp"
#include "warmcb/eval.hpp"
#include "warmcb_cli/config.hpp"

namespace warmcb::cli {

// One (dataset, split, noise, algorithm, epsilon, seed) condition. Splits come from
// ns/nb counts or from single ns_fractions/nb_fractions values.
ResultRecord cmd_run(const KeyValueConfig& config);

// Runs the grid and writes the results CSV; returns its path.
std::filesystem::path cmd_sweep(const KeyValueConfig& config, std::ostream& log);

void cmd_cdf(const std::filesystem::path& results_csv, CdfGrouping grouping, std::ostream& out);

void cmd_ucb_demo(double delta, std::size_t ns, std::size_t nb, bool shifted_log, std::ostream& out);

struct BoundsRequest {
  BoundParams params;
  double alpha = 1.0;
  double delta_sim = 0.0;
  double t = 1.0;
  std::vector<double> grid;
};

void cmd_bounds(const BoundsRequest& request, std::ostream& out);

void cmd_similarity(const std::filesystem::path& instance, double alpha, double delta, std::ostream& out);

}  // namespace warmcb::cli
