#include "warmcb/eval.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <tuple>

#include "warmcb/error.hpp"

namespace warmcb {

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double average_cost(const Trajectory& traj) {
  require(!traj.empty(), Errc::empty_dataset, "empty trajectory");
  double total = 0.0;
  for (const auto& r : traj.rounds) total += r.cost;
  return total / static_cast<double>(traj.size());
}

double normalized_error(double e, double e_star, double e_max) {
  require(e_max >= e_star, Errc::invalid_argument, "worst cost below the skyline");
  if (e_max == e_star) return 0.0;
  return (e - e_star) / (e_max - e_star);
}

Cdf build_cdf(std::span<const double> scores, std::optional<double> upper) {
  require(!scores.empty(), Errc::empty_dataset, "no scores for a CDF");
  std::vector<double> sorted(scores.begin(), scores.end());
  std::sort(sorted.begin(), sorted.end());
  const double hi = upper.value_or(std::max(0.0, sorted.back()));
  require(hi >= 0.0, Errc::invalid_argument, "CDF upper limit below 0");
  Cdf cdf;
  cdf.grid.resize(kCdfGridSize);
  cdf.values.resize(kCdfGridSize);
  const double n = static_cast<double>(sorted.size());
  for (std::size_t i = 0; i < kCdfGridSize; ++i) {
    const double x = i + 1 == kCdfGridSize ? hi : hi * static_cast<double>(i) / static_cast<double>(kCdfGridSize - 1);
    cdf.grid[i] = x;
    const auto count = std::upper_bound(sorted.begin(), sorted.end(), x) - sorted.begin();
    cdf.values[i] = static_cast<double>(count) / n;
  }
  return cdf;
}

Cdf aggregate_cdfs(std::span<const Cdf> cdfs) {
  require(!cdfs.empty(), Errc::empty_dataset, "no CDFs to aggregate");
  Cdf out = cdfs.front();
  // Running mean, so averaging identical curves returns them unchanged.
  for (std::size_t k = 1; k < cdfs.size(); ++k) {
    const auto& c = cdfs[k];
    require(c.grid == out.grid && c.values.size() == out.values.size(), Errc::invalid_argument,
            "CDFs on different grids");
    for (std::size_t i = 0; i < c.values.size(); ++i) {
      out.values[i] += (c.values[i] - out.values[i]) / static_cast<double>(k + 1);
    }
  }
  return out;
}

namespace {

auto cell_key(const ResultRecord& r) {
  return std::tie(r.dataset, r.ns, r.nb, r.noise_kind, r.noise_p, r.epsilon, r.seed);
}

auto canonical_key(const ResultRecord& r) {
  return std::tie(r.dataset, r.ns, r.nb, r.noise_kind, r.noise_p, r.algorithm, r.epsilon, r.seed);
}

std::string noise_label(const ResultRecord& r) {
  return r.noise_kind == "noiseless" ? r.noise_kind : r.noise_kind + ":" + format_double(r.noise_p);
}

std::vector<std::string_view> split_csv_line(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
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

template <class T>
T parse_field(std::string_view s, std::size_t line, const char* column) {
  T v{};
  if constexpr (std::is_floating_point_v<T>) {
    if (s == "inf") return std::numeric_limits<T>::infinity();
  }
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  require(!s.empty() && res.ec == std::errc() && res.ptr == s.data() + s.size(), Errc::parse_error,
          "line " + std::to_string(line) + ": bad value '" + std::string(s) + "' in column " + column);
  return v;
}

}  // namespace

void normalize_records(std::vector<ResultRecord>& records) {
  using CellKey = std::tuple<std::string, std::size_t, std::size_t, std::string, double, double, std::size_t>;
  std::map<CellKey, double> worst;
  for (const auto& r : records) {
    if (r.status != RecordStatus::ok) continue;
    auto [it, inserted] = worst.emplace(CellKey(cell_key(r)), r.avg_cost);
    if (!inserted) it->second = std::max(it->second, r.avg_cost);
  }
  for (auto& r : records) {
    if (r.status != RecordStatus::ok) {
      r.normalized_error.reset();
      continue;
    }
    const double e_max = worst.at(CellKey(cell_key(r)));
    // If every algorithm beats the skyline the cell carries no spread; anchoring at
    // e_max scores the whole cell 0 instead of dividing by a negative range.
    const double e_star = std::min(r.skyline, e_max);
    r.normalized_error = normalized_error(r.avg_cost, e_star, e_max);
  }
}

void sort_records(std::vector<ResultRecord>& records) {
  std::stable_sort(records.begin(), records.end(),
                   [](const ResultRecord& a, const ResultRecord& b) { return canonical_key(a) < canonical_key(b); });
}

void write_results_csv(std::span<const ResultRecord> records, std::ostream& out) {
  out << kResultsHeader << '\n';
  for (const auto& r : records) {
    out << r.dataset << ',' << r.ns << ',' << r.nb << ',' << format_double(r.ratio) << ',' << r.noise_kind << ','
        << format_double(r.noise_p) << ',' << r.algorithm << ',' << format_double(r.epsilon) << ',' << r.seed << ',';
    if (r.status == RecordStatus::ok) {
      out << format_double(r.avg_cost) << ',' << format_double(r.skyline) << ','
          << (r.normalized_error ? format_double(*r.normalized_error) : std::string()) << '\n';
    } else {
      const char* marker = r.status == RecordStatus::skipped ? "skipped" : "error";
      out << marker << ',' << marker << ',' << marker << '\n';
    }
  }
}

void write_results_csv(std::span<const ResultRecord> records, const std::filesystem::path& path) {
  std::ofstream out(path);
  require(out.good(), Errc::io_error, "cannot write " + path.string());
  write_results_csv(records, out);
  require(out.good(), Errc::io_error, "failed writing " + path.string());
}

std::vector<ResultRecord> read_results_csv(std::istream& in) {
  std::string line;
  require(static_cast<bool>(std::getline(in, line)), Errc::schema_error, "results file is empty");
  const auto header = split_csv_line(line);
  const std::vector<std::string> wanted = {"dataset", "ns",        "nb",   "ratio",    "noise_kind", "noise_p",
                                           "algorithm", "epsilon", "seed", "avg_cost", "skyline",    "normalized_error"};
  std::vector<std::size_t> pos(wanted.size());
  for (std::size_t w = 0; w < wanted.size(); ++w) {
    auto it = std::find(header.begin(), header.end(), wanted[w]);
    require(it != header.end(), Errc::schema_error, "results file is missing column '" + wanted[w] + "'");
    pos[w] = static_cast<std::size_t>(it - header.begin());
  }
  std::vector<ResultRecord> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto f = split_csv_line(line);
    require(f.size() == header.size(), Errc::parse_error,
            "line " + std::to_string(line_no) + ": expected " + std::to_string(header.size()) + " fields");
    ResultRecord r;
    r.dataset = std::string(f[pos[0]]);
    r.ns = parse_field<std::size_t>(f[pos[1]], line_no, "ns");
    r.nb = parse_field<std::size_t>(f[pos[2]], line_no, "nb");
    r.ratio = parse_field<double>(f[pos[3]], line_no, "ratio");
    r.noise_kind = std::string(f[pos[4]]);
    r.noise_p = parse_field<double>(f[pos[5]], line_no, "noise_p");
    r.algorithm = std::string(f[pos[6]]);
    r.epsilon = parse_field<double>(f[pos[7]], line_no, "epsilon");
    r.seed = parse_field<std::size_t>(f[pos[8]], line_no, "seed");
    const std::string_view cost = f[pos[9]];
    if (cost == "skipped" || cost == "error") {
      r.status = cost == "skipped" ? RecordStatus::skipped : RecordStatus::error;
    } else {
      r.avg_cost = parse_field<double>(cost, line_no, "avg_cost");
      r.skyline = parse_field<double>(f[pos[10]], line_no, "skyline");
      if (!f[pos[11]].empty()) r.normalized_error = parse_field<double>(f[pos[11]], line_no, "normalized_error");
    }
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<ResultRecord> read_results_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(in.good(), Errc::io_error, "cannot open " + path.string());
  return read_results_csv(in);
}

CdfGrouping parse_cdf_grouping(const std::string& text) {
  if (text == "ratio") return CdfGrouping::ratio;
  if (text == "noise") return CdfGrouping::noise;
  if (text == "all") return CdfGrouping::all;
  fail(Errc::parse_error, "unknown grouping '" + text + "' (expected ratio, noise, all)");
}

std::vector<CdfRow> cdf_table(std::span<const ResultRecord> records, CdfGrouping grouping) {
  // unit (noise, eps, ratio) -> algorithm -> scores
  using Unit = std::tuple<std::string, double, double>;
  std::map<Unit, std::map<std::string, std::vector<double>>> units;
  double upper = 0.0;
  for (const auto& r : records) {
    if (r.status != RecordStatus::ok || !r.normalized_error) continue;
    units[{noise_label(r), r.epsilon, r.ratio}][r.algorithm].push_back(*r.normalized_error);
    upper = std::max(upper, *r.normalized_error);
  }
  require(!units.empty(), Errc::empty_dataset, "no scored records to build CDFs from");

  auto key = [](const std::string& noise, const std::string& eps, const std::string& ratio) {
    return "noise=" + noise + ";eps=" + eps + ";ratio=" + ratio;
  };

  std::vector<CdfRow> rows;
  auto emit = [&](const std::string& group, const std::string& algorithm, const Cdf& cdf) {
    for (std::size_t i = 0; i < cdf.grid.size(); ++i) rows.push_back({group, algorithm, cdf.grid[i], cdf.values[i]});
  };

  // aggregate key -> algorithm -> member CDFs
  std::map<std::string, std::map<std::string, std::vector<Cdf>>> aggregates;
  for (const auto& [unit, by_alg] : units) {
    const auto& [noise, eps, ratio] = unit;
    const std::string eps_s = format_double(eps);
    const std::string ratio_s = format_double(ratio);
    for (const auto& [alg, scores] : by_alg) {
      Cdf cdf = build_cdf(scores, upper);
      emit(key(noise, eps_s, ratio_s), alg, cdf);
      std::string agg;
      switch (grouping) {
        case CdfGrouping::ratio: agg = key(noise, eps_s, "all"); break;
        case CdfGrouping::noise: agg = key("all", eps_s, ratio_s); break;
        case CdfGrouping::all: agg = key("all", eps_s, "all"); break;
      }
      aggregates[agg][alg].push_back(std::move(cdf));
    }
  }
  for (const auto& [group, by_alg] : aggregates) {
    for (const auto& [alg, cdfs] : by_alg) emit(group, alg, aggregate_cdfs(cdfs));
  }
  return rows;
}

void write_cdf_csv(std::span<const CdfRow> rows, std::ostream& out) {
  out << kCdfHeader << '\n';
  for (const auto& r : rows) {
    out << r.group_key << ',' << r.algorithm << ',' << format_double(r.x) << ',' << format_double(r.y) << '\n';
  }
}

}  // namespace warmcb
