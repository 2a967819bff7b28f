#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "warmcb/rng.hpp"
#include "warmcb/types.hpp"

namespace warmcb {

enum class NoiseKind {
  noiseless,
  uar,
  cyc,
  maj,
};

struct NoiseModel {
  NoiseKind kind = NoiseKind::noiseless;
  double p = 0.0;

  friend bool operator==(const NoiseModel&, const NoiseModel&) = default;
};

std::string_view to_string(NoiseKind kind) noexcept;
NoiseKind parse_noise_kind(std::string_view text);

// "noiseless", or "<kind>:<p>" such as "cyc:0.25".
NoiseModel parse_noise_model(std::string_view text);
std::string to_string(const NoiseModel& model);

// Noiseless plus {uar, cyc, maj} x {0.25, 0.5, 1.0}.
std::vector<NoiseModel> default_noise_grid();

// Zero at the label, one elsewhere.
CostVector make_bandit_cost(std::size_t label, std::size_t num_actions);

// Zero-cost action after corruption. One coin is drawn on every call so the stream
// position does not depend on the noise kind.
std::size_t corrupt_label(std::size_t label, const NoiseModel& model, std::size_t majority_label,
                          std::size_t num_actions, Rng& rng);

CostVector corrupt(std::size_t label, const NoiseModel& model, std::size_t majority_label, std::size_t num_actions,
                   Rng& rng);

}  // namespace warmcb
