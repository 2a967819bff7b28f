#include "warmcb_cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "warmcb/error.hpp"

namespace warmcb::cli {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <class T>
T parse_number(const std::string& key, const std::string& text) {
  T v{};
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  require(!text.empty() && res.ec == std::errc() && res.ptr == text.data() + text.size(), Errc::parse_error,
          "config field '" + key + "': '" + text + "' is not a valid number");
  return v;
}

}  // namespace

KeyValueConfig KeyValueConfig::parse(const std::string& text, const std::string& source) {
  KeyValueConfig cfg;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    require(eq != std::string::npos, Errc::parse_error,
            source + ":" + std::to_string(line_no) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    require(!key.empty(), Errc::parse_error, source + ":" + std::to_string(line_no) + ": empty key");
    cfg.values_[key] = trim(line.substr(eq + 1));
  }
  return cfg;
}

KeyValueConfig KeyValueConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(in.good(), Errc::io_error, "cannot open config " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path.string());
}

std::optional<std::string> KeyValueConfig::get(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

void KeyValueConfig::merge(const KeyValueConfig& other) {
  for (const auto& [k, v] : other.values_) values_[k] = v;
}

void KeyValueConfig::check_keys(const std::vector<std::string>& allowed) const {
  for (const auto& [k, v] : values_) {
    require(std::find(allowed.begin(), allowed.end(), k) != allowed.end(), Errc::schema_error,
            "unknown config field '" + k + "'");
  }
}

std::string KeyValueConfig::get_string(const std::string& key, const std::string& fallback) const {
  return get(key).value_or(fallback);
}

double KeyValueConfig::get_double(const std::string& key, double fallback) const {
  auto v = get(key);
  return v ? parse_number<double>(key, *v) : fallback;
}

std::size_t KeyValueConfig::get_size(const std::string& key, std::size_t fallback) const {
  auto v = get(key);
  return v ? parse_number<std::size_t>(key, *v) : fallback;
}

bool KeyValueConfig::get_bool(const std::string& key, bool fallback) const {
  auto v = get(key);
  if (!v) return fallback;
  if (*v == "true" || *v == "1" || *v == "yes") return true;
  if (*v == "false" || *v == "0" || *v == "no") return false;
  fail(Errc::parse_error, "config field '" + key + "': expected true or false, got '" + *v + "'");
}

std::vector<std::string> KeyValueConfig::get_list(const std::string& key,
                                                  const std::vector<std::string>& fallback) const {
  auto v = get(key);
  return v ? split(*v, ',') : fallback;
}

std::vector<double> KeyValueConfig::get_double_list(const std::string& key, const std::vector<double>& fallback) const {
  auto v = get(key);
  if (!v) return fallback;
  std::vector<double> out;
  for (const auto& item : split(*v, ',')) out.push_back(parse_number<double>(key, item));
  return out;
}

DatasetSpec parse_dataset_spec(const std::string& text) {
  DatasetSpec spec;
  spec.text = text;
  if (text.rfind("synth:", 0) != 0) {
    spec.path = text;
    return spec;
  }
  spec.synthetic = true;
  bool have_n = false, have_d = false, have_k = false;
  for (const auto& part : split(text.substr(6), ':')) {
    const auto eq = part.find('=');
    require(eq != std::string::npos, Errc::parse_error, "dataset '" + text + "': expected name=value in '" + part + "'");
    const std::string name = part.substr(0, eq);
    const std::string value = part.substr(eq + 1);
    if (name == "n") {
      spec.n = parse_number<std::size_t>("datasets", value);
      have_n = true;
    } else if (name == "d") {
      spec.d = parse_number<std::size_t>("datasets", value);
      have_d = true;
    } else if (name == "k") {
      spec.k = parse_number<std::size_t>("datasets", value);
      have_k = true;
    } else if (name == "label_noise") {
      spec.label_noise = parse_number<double>("datasets", value);
    } else if (name == "seed") {
      spec.seed = parse_number<std::uint64_t>("datasets", value);
    } else {
      fail(Errc::parse_error, "dataset '" + text + "': unknown parameter '" + name + "'");
    }
  }
  require(have_n && have_d && have_k, Errc::parse_error, "dataset '" + text + "' needs n, d and k");
  return spec;
}

MulticlassDataset load_dataset(const DatasetSpec& spec, const std::string& label_column) {
  if (!spec.synthetic) return load_csv(spec.path, label_column);
  MulticlassDataset ds = synth_linear(spec.n, spec.d, spec.k, spec.label_noise, spec.seed);
  ds.name += "_s" + std::to_string(spec.seed);
  return ds;
}

const std::vector<std::string>& sweep_keys() {
  static const std::vector<std::string> keys = {
      "datasets",    "label_column", "ns_fractions", "nb_fractions", "ns",           "nb",
      "noise",       "algorithms",   "epsilons",     "seeds",        "seed",         "base_seed",
      "warm_floor",  "solver",       "ridge",        "learning_rate", "lr_mode",     "warm_passes",
      "full_retrain", "retrain_passes", "exploration", "skyline_passes", "skyline_learning_rate",
      "threads",     "output_dir",   "output"};
  return keys;
}

std::filesystem::path default_output_dir() {
  if (const char* env = std::getenv("WARMCB_OUTPUT_DIR"); env && *env) return env;
  return ".";
}

SweepPlan resolve_sweep(const KeyValueConfig& cfg) {
  cfg.check_keys(sweep_keys());
  SweepPlan plan;
  for (const auto& d : cfg.get_list("datasets", {})) plan.datasets.push_back(parse_dataset_spec(d));
  require(!plan.datasets.empty(), Errc::schema_error, "config field 'datasets' is required");
  plan.label_column = cfg.get_string("label_column", "label");

  SweepConfig& c = plan.config;
  c.ns_fractions = cfg.get_double_list("ns_fractions", c.ns_fractions);
  c.nb_fractions = cfg.get_double_list("nb_fractions", c.nb_fractions);
  if (auto noise = cfg.get("noise"); noise && *noise != "default") {
    c.noise.clear();
    for (const auto& item : cfg.get_list("noise", {})) c.noise.push_back(parse_noise_model(item));
  }
  if (auto algs = cfg.get("algorithms"); algs && *algs != "default") {
    c.algorithms.clear();
    for (const auto& item : cfg.get_list("algorithms", {})) c.algorithms.push_back(parse_algorithm(item));
  }
  c.epsilons = cfg.get_double_list("epsilons", c.epsilons);
  for (double e : c.epsilons) {
    require(e > 0.0 && e <= 1.0, Errc::invalid_argument, "config field 'epsilons': values must be in (0, 1]");
  }
  c.num_seeds = cfg.get_size("seeds", c.num_seeds);
  c.base_seed = cfg.get_size("base_seed", 0);
  c.warm_floor = cfg.get_size("warm_floor", c.warm_floor);
  c.threads = cfg.get_size("threads", 0);

  LearnerSettings& l = c.learner;
  const std::string solver = cfg.get_string("solver", "gradient");
  if (solver == "exact") {
    l.solver = LinearSolver::exact;
  } else {
    require(solver == "gradient", Errc::parse_error, "config field 'solver': expected gradient or exact");
  }
  l.ridge = cfg.get_double("ridge", l.ridge);
  l.learning_rate = cfg.get_double("learning_rate", l.learning_rate);
  const std::string lr_mode = cfg.get_string("lr_mode", "fixed");
  if (lr_mode == "grid") {
    l.lr_mode = LearningRateMode::grid;
  } else {
    require(lr_mode == "fixed", Errc::parse_error, "config field 'lr_mode': expected fixed or grid");
  }
  l.warm_passes = cfg.get_size("warm_passes", l.warm_passes);
  l.full_retrain = cfg.get_bool("full_retrain", l.full_retrain);
  l.retrain_passes = cfg.get_size("retrain_passes", l.retrain_passes);
  const std::string exploration = cfg.get_string("exploration", "last");
  if (exploration == "averaged") {
    l.base = ExplorationBase::averaged;
  } else {
    require(exploration == "last", Errc::parse_error, "config field 'exploration': expected last or averaged");
  }

  plan.skyline.exact = l.solver == LinearSolver::exact;
  plan.skyline.ridge = l.ridge;
  plan.skyline.passes = cfg.get_size("skyline_passes", plan.skyline.passes);
  plan.skyline.learning_rate = cfg.get_double("skyline_learning_rate", plan.skyline.learning_rate);

  plan.output_dir = cfg.get("output_dir").value_or(default_output_dir().string());
  return plan;
}

}  // namespace warmcb::cli
