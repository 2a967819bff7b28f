#include "warmcb/datasets.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>

#include "warmcb/error.hpp"
#include "warmcb/linear.hpp"
#include "warmcb/rng.hpp"

namespace warmcb {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

template <class T>
bool parse_number(std::string_view s, T& out) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return !s.empty() && res.ec == std::errc() && res.ptr == s.data() + s.size();
}

std::string location(const std::filesystem::path& path, std::size_t line) {
  return path.string() + ":" + std::to_string(line) + ": ";
}

}  // namespace

MulticlassDataset load_csv(const std::filesystem::path& path, const std::string& label_column) {
  std::ifstream in(path);
  require(in.good(), Errc::io_error, "cannot open " + path.string());
  std::string line;
  require(static_cast<bool>(std::getline(in, line)), Errc::parse_error, location(path, 1) + "missing header row");

  const auto header = split_fields(line);
  std::size_t label_pos = header.size();
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (trim(header[i]) == label_column) label_pos = i;
  }
  require(label_pos < header.size(), Errc::schema_error,
          location(path, 1) + "no column named '" + label_column + "'");

  MulticlassDataset ds;
  ds.name = path.stem().string();
  ds.dimension = header.size() - 1;
  std::vector<long long> raw_labels;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split_fields(line);
    require(fields.size() == header.size(), Errc::parse_error,
            location(path, line_no) + "expected " + std::to_string(header.size()) + " fields, found " +
                std::to_string(fields.size()));
    Context x;
    x.id = raw_labels.size();
    x.features.reserve(ds.dimension);
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i == label_pos) {
        long long y = 0;
        require(parse_number(fields[i], y), Errc::parse_error,
                location(path, line_no) + "label '" + std::string(fields[i]) + "' is not an integer");
        raw_labels.push_back(y);
      } else {
        double v = 0.0;
        require(parse_number(fields[i], v) && std::isfinite(v), Errc::parse_error,
                location(path, line_no) + "feature '" + std::string(fields[i]) + "' is not a finite number");
        x.features.push_back(v);
      }
    }
    ds.contexts.push_back(std::move(x));
  }
  require(!raw_labels.empty(), Errc::empty_dataset, path.string() + " has no data rows");

  std::map<long long, std::size_t> dense;
  for (long long y : raw_labels) dense.emplace(y, 0);
  for (auto& [raw, idx] : dense) {
    idx = ds.original_labels.size();
    ds.original_labels.push_back(raw);
  }
  require(dense.size() >= 2, Errc::schema_error, path.string() + " needs at least 2 distinct labels");
  ds.num_actions = dense.size();
  for (long long y : raw_labels) ds.labels.push_back(dense[y]);
  return ds;
}

void save_csv(const MulticlassDataset& dataset, const std::filesystem::path& path) {
  std::ofstream out(path);
  require(out.good(), Errc::io_error, "cannot write " + path.string());
  for (std::size_t j = 0; j < dataset.dimension; ++j) out << 'f' << j << ',';
  out << "label\n";
  char buf[64];
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    for (double v : dataset.contexts[i].features) {
      auto res = std::to_chars(buf, buf + sizeof buf, v);
      out.write(buf, res.ptr - buf);
      out << ',';
    }
    const std::size_t y = dataset.labels[i];
    out << (dataset.original_labels.empty() ? static_cast<long long>(y) : dataset.original_labels[y]) << '\n';
  }
  require(out.good(), Errc::io_error, "failed writing " + path.string());
}

MulticlassDataset synth_linear(std::size_t n, std::size_t d, std::size_t num_actions, double label_noise,
                               std::uint64_t seed) {
  require(n >= 1 && d >= 1, Errc::invalid_argument, "synthetic dataset needs n >= 1 and d >= 1");
  require(num_actions >= 2, Errc::invalid_argument, "need at least 2 classes");
  require(label_noise >= 0.0 && label_noise <= 1.0, Errc::invalid_argument, "label noise outside [0, 1]");
  Rng rng(seed);

  std::vector<std::vector<double>> scorers(num_actions, std::vector<double>(d));
  for (auto& w : scorers) {
    for (double& v : w) v = rng.normal();
  }
  if (num_actions <= d) {
    // Gram-Schmidt keeps classes comparably sized.
    for (std::size_t a = 0; a < num_actions; ++a) {
      for (std::size_t b = 0; b < a; ++b) {
        double dot = 0.0;
        for (std::size_t j = 0; j < d; ++j) dot += scorers[a][j] * scorers[b][j];
        for (std::size_t j = 0; j < d; ++j) scorers[a][j] -= dot * scorers[b][j];
      }
      double norm = 0.0;
      for (double v : scorers[a]) norm += v * v;
      norm = std::sqrt(norm);
      for (double& v : scorers[a]) v /= norm;
    }
  }

  MulticlassDataset ds;
  ds.name = "synth_n" + std::to_string(n) + "_d" + std::to_string(d) + "_k" + std::to_string(num_actions);
  ds.num_actions = num_actions;
  ds.dimension = d;
  for (std::size_t a = 0; a < num_actions; ++a) ds.original_labels.push_back(static_cast<long long>(a));
  for (std::size_t i = 0; i < n; ++i) {
    Context x;
    x.id = i;
    x.features.resize(d);
    for (double& v : x.features) v = 2.0 * rng.uniform() - 1.0;
    std::size_t y = 0;
    double best = -1e300;
    for (std::size_t a = 0; a < num_actions; ++a) {
      double s = 0.0;
      for (std::size_t j = 0; j < d; ++j) s += scorers[a][j] * x.features[j];
      if (s > best) {
        best = s;
        y = a;
      }
    }
    const bool flip = rng.uniform() < label_noise;
    const std::size_t replacement = rng.uniform_index(num_actions);
    ds.labels.push_back(flip ? replacement : y);
    ds.contexts.push_back(std::move(x));
  }
  return ds;
}

DatasetSplit split(const MulticlassDataset& dataset, const SplitSpec& spec) {
  require(spec.ns + spec.nb <= dataset.size(), Errc::invalid_argument,
          "ns + nb = " + std::to_string(spec.ns + spec.nb) + " exceeds dataset size " +
              std::to_string(dataset.size()));
  std::vector<std::size_t> order(dataset.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  Rng rng(spec.seed);
  rng.shuffle(order);
  DatasetSplit out;
  out.warm.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(spec.ns));
  out.interaction.assign(order.begin() + static_cast<std::ptrdiff_t>(spec.ns),
                         order.begin() + static_cast<std::ptrdiff_t>(spec.ns + spec.nb));
  return out;
}

std::size_t count_from_fraction(std::size_t n, double fraction) {
  require(fraction >= 0.0 && fraction <= 1.0, Errc::invalid_argument, "fraction outside [0, 1]");
  return static_cast<std::size_t>(std::llround(fraction * static_cast<double>(n)));
}

std::vector<SupervisedExample> make_warm_start(const MulticlassDataset& dataset, const std::vector<std::size_t>& indices,
                                               const NoiseModel& noise, std::size_t majority, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<SupervisedExample> out;
  out.reserve(indices.size());
  for (std::size_t i : indices) {
    out.push_back({dataset.contexts.at(i), corrupt(dataset.labels[i], noise, majority, dataset.num_actions, rng)});
  }
  return out;
}

std::vector<InteractionRound> make_interaction(const MulticlassDataset& dataset,
                                               const std::vector<std::size_t>& indices) {
  std::vector<InteractionRound> out;
  out.reserve(indices.size());
  for (std::size_t i : indices) {
    out.push_back({dataset.contexts.at(i), make_bandit_cost(dataset.labels[i], dataset.num_actions)});
  }
  return out;
}

double skyline_error(const MulticlassDataset& dataset, const SkylineOptions& options) {
  require(dataset.size() > 0, Errc::empty_dataset, "empty dataset");
  std::vector<SupervisedExample> all;
  all.reserve(dataset.size());
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    all.push_back({dataset.contexts[i], make_bandit_cost(dataset.labels[i], dataset.num_actions)});
  }
  const auto reg = options.exact
                       ? solve_weighted(all, {}, {1.0, 0.0}, dataset.num_actions, dataset.dimension, options.ridge)
                       : train_weighted(all, {}, 0.0, dataset.num_actions, dataset.dimension,
                                        {options.passes, options.learning_rate, options.seed});
  std::size_t errors = 0;
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    if (reg.induced_action(dataset.contexts[i]) != dataset.labels[i]) ++errors;
  }
  return static_cast<double>(errors) / static_cast<double>(dataset.size());
}

}  // namespace warmcb
