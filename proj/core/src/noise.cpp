#include "warmcb/noise.hpp"

#include <charconv>

#include "warmcb/error.hpp"

namespace warmcb {

std::string_view to_string(NoiseKind kind) noexcept {
  switch (kind) {
    case NoiseKind::noiseless: return "noiseless";
    case NoiseKind::uar: return "uar";
    case NoiseKind::cyc: return "cyc";
    case NoiseKind::maj: return "maj";
  }
  return "unknown";
}

NoiseKind parse_noise_kind(std::string_view text) {
  for (NoiseKind k : {NoiseKind::noiseless, NoiseKind::uar, NoiseKind::cyc, NoiseKind::maj}) {
    if (text == to_string(k)) return k;
  }
  fail(Errc::parse_error, "unknown noise kind '" + std::string(text) + "' (expected noiseless, uar, cyc, maj)");
}

NoiseModel parse_noise_model(std::string_view text) {
  const auto colon = text.find(':');
  NoiseModel model{parse_noise_kind(text.substr(0, colon)), 0.0};
  if (colon == std::string_view::npos) {
    require(model.kind == NoiseKind::noiseless, Errc::parse_error,
            "noise '" + std::string(text) + "' needs a probability, e.g. cyc:0.25");
    return model;
  }
  const std::string_view num = text.substr(colon + 1);
  auto res = std::from_chars(num.data(), num.data() + num.size(), model.p);
  require(res.ec == std::errc() && res.ptr == num.data() + num.size(), Errc::parse_error,
          "bad noise probability in '" + std::string(text) + "'");
  require(model.p >= 0.0 && model.p <= 1.0, Errc::invalid_argument, "noise probability outside [0, 1]");
  return model;
}

std::string to_string(const NoiseModel& model) {
  if (model.kind == NoiseKind::noiseless) return "noiseless";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, model.p);
  return std::string(to_string(model.kind)) + ":" + std::string(buf, res.ptr);
}

std::vector<NoiseModel> default_noise_grid() {
  std::vector<NoiseModel> grid{{NoiseKind::noiseless, 0.0}};
  for (NoiseKind k : {NoiseKind::uar, NoiseKind::cyc, NoiseKind::maj}) {
    for (double p : {0.25, 0.5, 1.0}) grid.push_back({k, p});
  }
  return grid;
}

CostVector make_bandit_cost(std::size_t label, std::size_t num_actions) {
  require(label < num_actions, Errc::invalid_argument,
          "label " + std::to_string(label) + " outside [0, " + std::to_string(num_actions) + ")");
  std::vector<double> c(num_actions, 1.0);
  c[label] = 0.0;
  return CostVector(std::move(c));
}

std::size_t corrupt_label(std::size_t label, const NoiseModel& model, std::size_t majority_label,
                          std::size_t num_actions, Rng& rng) {
  require(label < num_actions && majority_label < num_actions, Errc::invalid_argument, "label out of range");
  require(model.p >= 0.0 && model.p <= 1.0, Errc::invalid_argument, "noise probability outside [0, 1]");
  const bool flip = rng.uniform() < model.p;
  if (!flip) return label;
  switch (model.kind) {
    case NoiseKind::noiseless: return label;
    case NoiseKind::uar: return rng.uniform_index(num_actions);
    case NoiseKind::cyc: return (label + 1) % num_actions;
    case NoiseKind::maj: return majority_label;
  }
  return label;
}

CostVector corrupt(std::size_t label, const NoiseModel& model, std::size_t majority_label, std::size_t num_actions,
                   Rng& rng) {
  return make_bandit_cost(corrupt_label(label, model, majority_label, num_actions, rng), num_actions);
}

}  // namespace warmcb
