#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "warmcb/trajectory.hpp"

namespace warmcb {

double average_cost(const Trajectory& traj);

// (e - e*) / (e_max - e*), or 0 when e_max == e*. Values below 0 are kept.
double normalized_error(double e, double e_star, double e_max);

inline constexpr std::size_t kCdfGridSize = 1001;

struct Cdf {
  std::vector<double> grid;
  std::vector<double> values;
};

// Empirical CDF on 1001 equally spaced points of [0, upper]; upper defaults to the
// largest score (clamped at 0).
Cdf build_cdf(std::span<const double> scores, std::optional<double> upper = std::nullopt);

// Pointwise mean; every input must share the same grid.
Cdf aggregate_cdfs(std::span<const Cdf> cdfs);

enum class RecordStatus {
  ok,
  skipped,
  error,
};

struct ResultRecord {
  std::string dataset;
  std::size_t ns = 0;
  std::size_t nb = 0;
  double ratio = 0.0;
  std::string noise_kind;
  double noise_p = 0.0;
  std::string algorithm;
  double epsilon = 0.0;
  std::size_t seed = 0;
  RecordStatus status = RecordStatus::ok;
  double avg_cost = 0.0;
  double skyline = 0.0;
  std::optional<double> normalized_error;
};

// Fills normalized_error for ok records, normalizing within each
// (dataset, ns, nb, noise, epsilon, seed) cell by the worst algorithm in the cell.
void normalize_records(std::vector<ResultRecord>& records);

// Canonical order: dataset, ns, nb, noise_kind, noise_p, algorithm, epsilon, seed.
void sort_records(std::vector<ResultRecord>& records);

inline constexpr const char* kResultsHeader =
    "dataset,ns,nb,ratio,noise_kind,noise_p,algorithm,epsilon,seed,avg_cost,skyline,normalized_error";

void write_results_csv(std::span<const ResultRecord> records, std::ostream& out);
void write_results_csv(std::span<const ResultRecord> records, const std::filesystem::path& path);
std::vector<ResultRecord> read_results_csv(std::istream& in);
std::vector<ResultRecord> read_results_csv(const std::filesystem::path& path);

enum class CdfGrouping {
  ratio,
  noise,
  all,
};

CdfGrouping parse_cdf_grouping(const std::string& text);

struct CdfRow {
  std::string group_key;
  std::string algorithm;
  double x = 0.0;
  double y = 0.0;
};

// One CDF per (noise, epsilon, ratio, algorithm) plus pointwise averages over the
// grouped dimension(s), keyed "noise=...;eps=...;ratio=..." with "all" for averaged
// dimensions. Every CDF shares one grid ending at the largest score in the input.
std::vector<CdfRow> cdf_table(std::span<const ResultRecord> records, CdfGrouping grouping);

inline constexpr const char* kCdfHeader = "group_key,algorithm,x,y";

void write_cdf_csv(std::span<const CdfRow> rows, std::ostream& out);

// Shortest round-trip text for a double.
std::string format_double(double v);

}  // namespace warmcb
