#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "warmcb/datasets.hpp"
#include "warmcb/experiment.hpp"

namespace warmcb::cli {

// Plain "key = value" file: '#' starts a comment, blank lines are ignored, list values
// are comma separated.
class KeyValueConfig {
 public:
  static KeyValueConfig parse(const std::string& text, const std::string& source = "<config>");
  static KeyValueConfig load(const std::filesystem::path& path);

  void set(const std::string& key, const std::string& value) { values_[key] = value; }
  bool has(const std::string& key) const { return values_.count(key) != 0; }
  std::optional<std::string> get(const std::string& key) const;

  // Later values win.
  void merge(const KeyValueConfig& other);

  // Throws a schema error naming the first key not in `allowed`.
  void check_keys(const std::vector<std::string>& allowed) const;

  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  std::size_t get_size(const std::string& key, std::size_t fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::vector<std::string> get_list(const std::string& key, const std::vector<std::string>& fallback) const;
  std::vector<double> get_double_list(const std::string& key, const std::vector<double>& fallback) const;

  const std::map<std::string, std::string>& values() const noexcept { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

// "synth:n=4000:d=10:k=2[:label_noise=0][:seed=1]" or a CSV path.
struct DatasetSpec {
  std::string text;
  bool synthetic = false;
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t k = 0;
  double label_noise = 0.0;
  std::uint64_t seed = 1;
  std::filesystem::path path;
};

DatasetSpec parse_dataset_spec(const std::string& text);
MulticlassDataset load_dataset(const DatasetSpec& spec, const std::string& label_column = "label");

struct SweepPlan {
  std::vector<DatasetSpec> datasets;
  SweepConfig config;
  SkylineOptions skyline;
  std::string label_column = "label";
  std::filesystem::path output_dir;
};

// Keys accepted by run and sweep configs.
const std::vector<std::string>& sweep_keys();

// output_dir falls back to $WARMCB_OUTPUT_DIR, then ".".
SweepPlan resolve_sweep(const KeyValueConfig& config);

std::filesystem::path default_output_dir();

}  // namespace warmcb::cli
