#include "warmcb/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "warmcb/error.hpp"

namespace warmcb {

namespace {

double log_term(double multiplier, const BoundParams& p) {
  return std::log(8.0 * multiplier * p.policy_count / p.delta_conf);
}

void require_lambda(double lambda) {
  require(lambda >= 0.0 && lambda <= 1.0, Errc::invalid_argument, "lambda outside [0, 1]");
}

}  // namespace

std::size_t epoch_count(std::size_t nb) {
  std::size_t e = 0;
  while (e < 64 && (std::size_t{1} << e) < nb) ++e;
  return e;
}

void validate(const BoundParams& p) {
  require(p.num_actions >= 2, Errc::invalid_argument, "K must be at least 2");
  require(p.epsilon > 0.0 && p.epsilon <= 1.0, Errc::invalid_argument, "epsilon must be in (0, 1]");
  require(p.nb >= 1, Errc::invalid_argument, "nb must be at least 1");
  require(p.policy_count >= 1.0, Errc::invalid_argument, "policy count must be at least 1");
  require(p.delta_conf > 0.0 && p.delta_conf < 1.0 / std::numbers::e, Errc::invalid_argument,
          "confidence delta must be in (0, 1/e)");
}

double v_t(double lambda, double t, const BoundParams& p) {
  require_lambda(lambda);
  require(t >= 0.0, Errc::invalid_argument, "t must be nonnegative");
  const double k = static_cast<double>(p.num_actions);
  const double ns = static_cast<double>(p.ns);
  const double l = log_term(static_cast<double>(p.nb), p);
  const double mu = 1.0 - lambda;
  return 2.0 * std::sqrt((lambda * lambda * k * t / p.epsilon + mu * mu * ns) * l) +
         (lambda * k / p.epsilon + mu) * l;
}

double g_t(double lambda, double alpha, double delta_sim, double t, const BoundParams& p) {
  const double ns = static_cast<double>(p.ns);
  const double denom = lambda * t + (1.0 - lambda) * ns * alpha;
  require(denom > 0.0, Errc::degenerate_bound, "G_t denominator is zero");
  return ((1.0 - lambda) * ns * delta_sim + 2.0 * v_t(lambda, t, p)) / denom;
}

double g_bar(double lambda, double alpha, double delta_sim, double t, const BoundParams& p) {
  return std::min(1.0, g_t(lambda, alpha, delta_sim, t, p));
}

double w_t(double lambda, double t, const BoundParams& p) {
  require_lambda(lambda);
  require(t >= 1.0, Errc::invalid_argument, "t must be at least 1");
  require(p.ns >= 1, Errc::degenerate_bound, "W_t needs ns >= 1");
  require(p.nb >= 2, Errc::degenerate_bound, "W_t needs nb >= 2 (at least one epoch)");
  const double k = static_cast<double>(p.num_actions);
  const double ns = static_cast<double>(p.ns);
  const double e1 = static_cast<double>(epoch_count(p.nb)) + 1.0;
  const double l = log_term(static_cast<double>(epoch_count(p.nb)), p);
  const double mu = 1.0 - lambda;
  return 2.0 * std::sqrt((lambda * lambda * k / (t * p.epsilon) + mu * mu * e1 / ns) * l) +
         (lambda * k / (t * p.epsilon) + mu * e1 / ns) * l;
}

double h_t(double lambda, double alpha, double delta_sim, double t, const BoundParams& p) {
  const double denom = (1.0 - lambda) + lambda * alpha;
  require(denom > 0.0, Errc::degenerate_bound, "H_t denominator is zero");
  return (lambda * delta_sim + 2.0 * w_t(lambda, t, p)) / denom;
}

double arrow_regret_bound(const BoundParams& p, double alpha, double delta_sim, std::span<const double> grid) {
  validate(p);
  require(!grid.empty(), Errc::invalid_argument, "empty lambda grid");
  const double nb = static_cast<double>(p.nb);
  const double k = static_cast<double>(p.num_actions);
  const double grid_size = static_cast<double>(grid.size());
  double best = std::numeric_limits<double>::infinity();
  for (double lambda : grid) {
    double sum = 0.0;
    bool ok = true;
    for (std::size_t t = 1; t <= p.nb && ok; ++t) {
      try {
        sum += g_bar(lambda, alpha, delta_sim, static_cast<double>(t), p);
      } catch (const Error& e) {
        if (e.code() != Errc::degenerate_bound) throw;
        ok = false;
      }
    }
    if (ok) best = std::min(best, std::log(std::numbers::e * nb) / nb * sum);
  }
  require(std::isfinite(best), Errc::degenerate_bound, "every lambda in the grid is degenerate");
  return p.epsilon + 3.0 * std::sqrt(std::log(8.0 * nb * p.policy_count / p.delta_conf) / nb) +
         32.0 * std::sqrt(k * std::log(8.0 * nb * grid_size / p.delta_conf) / (nb * p.epsilon)) + best;
}

double supgt_regret_bound(const BoundParams& p, double alpha, double delta_sim, std::span<const double> grid) {
  validate(p);
  require(!grid.empty(), Errc::invalid_argument, "empty lambda grid");
  require(p.nb >= 2, Errc::degenerate_bound, "the epoch bound needs nb >= 2");
  require(p.ns >= 1, Errc::degenerate_bound, "the epoch bound needs ns >= 1");
  const double nb = static_cast<double>(p.nb);
  const double ns = static_cast<double>(p.ns);
  const double e = static_cast<double>(epoch_count(p.nb));
  const double grid_size = static_cast<double>(grid.size());
  double best = std::numeric_limits<double>::infinity();
  for (double lambda : grid) {
    double sum = 0.0;
    bool ok = true;
    for (std::size_t t = 1; t <= p.nb && ok; ++t) {
      try {
        sum += h_t(lambda, alpha, delta_sim, static_cast<double>(t), p);
      } catch (const Error& err) {
        if (err.code() != Errc::degenerate_bound) throw;
        ok = false;
      }
    }
    if (ok) best = std::min(best, 2.0 / nb * sum);
  }
  require(std::isfinite(best), Errc::degenerate_bound, "every lambda in the grid is degenerate");
  return p.epsilon + 3.0 * std::sqrt(std::log(8.0 * p.policy_count / p.delta_conf) / nb) +
         std::sqrt(2.0 * (e + 1.0) * std::log(8.0 * e * grid_size / p.delta_conf) / ns) + best;
}

double lambda0_bandit(double epsilon, std::size_t num_actions) {
  require(epsilon > 0.0, Errc::invalid_argument, "epsilon must be positive");
  return epsilon / (static_cast<double>(num_actions) + epsilon);
}

double lambda0_sup(std::size_t nb, double epsilon, std::size_t ns, std::size_t num_actions) {
  require(epsilon > 0.0, Errc::invalid_argument, "epsilon must be positive");
  const double b = static_cast<double>(nb) * epsilon;
  const double denom = static_cast<double>(ns) * static_cast<double>(num_actions) + b;
  require(denom > 0.0, Errc::degenerate_bound, "lambda0 undefined for ns = nb = 0");
  return b / denom;
}

Sqrt2Check check_sqrt2(double alpha, double delta_sim, double t, const BoundParams& p, std::size_t dense_grid_size) {
  require(dense_grid_size >= 2, Errc::invalid_argument, "dense grid needs at least 2 points");
  auto eval = [&](double lambda) {
    try {
      return g_t(lambda, alpha, delta_sim, t, p);
    } catch (const Error& e) {
      if (e.code() != Errc::degenerate_bound) throw;
      return std::numeric_limits<double>::infinity();
    }
  };
  Sqrt2Check out;
  out.endpoint_min = std::min(eval(0.0), eval(1.0));
  out.dense_min = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < dense_grid_size; ++i) {
    const double lambda = static_cast<double>(i) / static_cast<double>(dense_grid_size - 1);
    out.dense_min = std::min(out.dense_min, eval(lambda));
  }
  out.holds = out.endpoint_min <= std::sqrt(2.0) * out.dense_min + 1e-9;
  return out;
}

}  // namespace warmcb
