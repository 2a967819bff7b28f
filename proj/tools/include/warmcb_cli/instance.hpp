#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "warmcb/similarity.hpp"
#include "warmcb/tabular.hpp"

namespace warmcb::cli {

// Finite similarity instance. Two JSON layouts are accepted:
//   {"K": 3, "contexts": [{"weight": 0.25, "label_probs": [...]}, ...],
//    "noise": {"kind": "uar", "p": 0.5}, "majority_label": 0}
// where D1 is the clean label law and D2 its exact corruption, or
//   {"K": 2, "d1": [{"weight": 0.5, "costs": [...]}, ...], "d2": [...]}
// with one expected cost vector per context. The policy class is every map from the
// contexts to actions.
struct SimilarityInstance {
  FiniteCostDistribution d1;
  FiniteCostDistribution d2;
  TabularPolicyClass policy_class;
};

SimilarityInstance parse_instance(const std::string& json_text);
SimilarityInstance load_instance(const std::filesystem::path& path);

}  // namespace warmcb::cli
