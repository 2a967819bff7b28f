#pragma once

#include <cstddef>
#include <span>

namespace warmcb {

struct BoundParams {
  std::size_t num_actions = 2;
  double epsilon = 0.0125;
  std::size_t ns = 0;
  std::size_t nb = 1;
  double policy_count = 2.0;
  // Confidence parameter; must lie in (0, 1/e).
  double delta_conf = 0.05;
};

// ceil(log2 nb); 0 for nb <= 1.
std::size_t epoch_count(std::size_t nb);

void validate(const BoundParams& params);

double v_t(double lambda, double t, const BoundParams& params);
double g_t(double lambda, double alpha, double delta_sim, double t, const BoundParams& params);
double g_bar(double lambda, double alpha, double delta_sim, double t, const BoundParams& params);
double w_t(double lambda, double t, const BoundParams& params);
double h_t(double lambda, double alpha, double delta_sim, double t, const BoundParams& params);

// Average interaction regret bound for the adaptive reweighting learner. Lambda values
// with a degenerate denominator at some round are skipped.
double arrow_regret_bound(const BoundParams& params, double alpha, double delta_sim, std::span<const double> grid);

// Average supervised regret bound for the epoch-doubling learner.
double supgt_regret_bound(const BoundParams& params, double alpha, double delta_sim, std::span<const double> grid);

double lambda0_bandit(double epsilon, std::size_t num_actions);
double lambda0_sup(std::size_t nb, double epsilon, std::size_t ns, std::size_t num_actions);

struct Sqrt2Check {
  bool holds = false;
  double endpoint_min = 0.0;
  double dense_min = 0.0;
};

// min over {0, 1} of G_t against sqrt(2) times its minimum on a uniform grid of [0, 1].
Sqrt2Check check_sqrt2(double alpha, double delta_sim, double t, const BoundParams& params,
                       std::size_t dense_grid_size = 10001);

}  // namespace warmcb
