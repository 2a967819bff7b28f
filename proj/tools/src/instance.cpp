#include "warmcb_cli/instance.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "warmcb/error.hpp"

namespace warmcb::cli {

namespace {

using nlohmann::json;

const json& field(const json& obj, const char* name) {
  require(obj.is_object() && obj.contains(name), Errc::schema_error,
          std::string("instance is missing field '") + name + "'");
  return obj.at(name);
}

FiniteCostDistribution parse_expected(std::size_t k, const json& items, const char* name) {
  require(items.is_array() && !items.empty(), Errc::schema_error, std::string("'") + name + "' must be a nonempty array");
  std::vector<double> weights;
  std::vector<std::vector<double>> costs;
  for (const auto& item : items) {
    weights.push_back(field(item, "weight").get<double>());
    costs.push_back(field(item, "costs").get<std::vector<double>>());
  }
  return FiniteCostDistribution::from_expected(k, std::move(weights), std::move(costs));
}

}  // namespace

SimilarityInstance parse_instance(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(Errc::parse_error, std::string("instance is not valid JSON: ") + e.what());
  }
  try {
    const auto k = field(doc, "K").get<std::size_t>();
    if (doc.contains("contexts")) {
      LabelDistribution labels{k, {}};
      for (const auto& c : field(doc, "contexts")) {
        labels.contexts.push_back({field(c, "weight").get<double>(), field(c, "label_probs").get<std::vector<double>>()});
      }
      const auto& noise = field(doc, "noise");
      NoiseModel model{parse_noise_kind(field(noise, "kind").get<std::string>()),
                       noise.contains("p") ? noise.at("p").get<double>() : 0.0};
      const std::size_t majority =
          doc.contains("majority_label") ? doc.at("majority_label").get<std::size_t>() : majority_label(labels);
      FiniteCostDistribution d1 = from_labels(labels);
      FiniteCostDistribution d2 = from_labels(corrupt_exact(labels, model, majority));
      auto cls = enumerate_full_class(d1.context_ids(), k);
      return {std::move(d1), std::move(d2), std::move(cls)};
    }
    FiniteCostDistribution d1 = parse_expected(k, field(doc, "d1"), "d1");
    FiniteCostDistribution d2 = parse_expected(k, field(doc, "d2"), "d2");
    require(d1.num_contexts() == d2.num_contexts(), Errc::schema_error, "d1 and d2 must list the same contexts");
    auto cls = enumerate_full_class(d1.context_ids(), k);
    return {std::move(d1), std::move(d2), std::move(cls)};
  } catch (const json::exception& e) {
    fail(Errc::schema_error, std::string("instance has the wrong shape: ") + e.what());
  }
}

SimilarityInstance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(in.good(), Errc::io_error, "cannot open instance " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

}  // namespace warmcb::cli
