#include "warmcb_cli/commands.hpp"

#include <fstream>
#include <ostream>

#include "warmcb/baselines.hpp"
#include "warmcb/error.hpp"
#include "warmcb/experiment.hpp"
#include "warmcb_cli/instance.hpp"

namespace warmcb::cli {

namespace {

template <class T>
const T& single(const std::vector<T>& values, const char* key) {
  require(values.size() == 1, Errc::invalid_argument, std::string("run needs exactly one value for '") + key + "'");
  return values.front();
}

std::string cell(double v) { return format_double(v); }

}  // namespace

ResultRecord cmd_run(const KeyValueConfig& config) {
  const SweepPlan plan = resolve_sweep(config);
  const DatasetSpec& spec = single(plan.datasets, "datasets");
  const NoiseModel& noise = single(plan.config.noise, "noise");
  const Algorithm algorithm = single(plan.config.algorithms, "algorithms");
  const double epsilon = single(plan.config.epsilons, "epsilons");

  PreparedDataset ds = prepare_dataset(load_dataset(spec, plan.label_column), plan.skyline);
  const std::size_t n = ds.data.size();
  const std::size_t ns = config.has("ns") ? config.get_size("ns", 0)
                                          : count_from_fraction(n, single(plan.config.ns_fractions, "ns_fractions"));
  const std::size_t nb = config.has("nb") ? config.get_size("nb", 0)
                                          : count_from_fraction(n, single(plan.config.nb_fractions, "nb_fractions"));

  SweepConfig sweep = plan.config;
  sweep.algorithms = {algorithm};
  const Condition condition{ns, nb, noise, epsilon, config.get_size("seed", 0)};
  std::vector<ResultRecord> records = run_condition(ds, condition, sweep);
  normalize_records(records);
  return records.front();
}

std::filesystem::path cmd_sweep(const KeyValueConfig& config, std::ostream& log) {
  const SweepPlan plan = resolve_sweep(config);
  std::vector<PreparedDataset> datasets;
  for (const auto& spec : plan.datasets) {
    datasets.push_back(prepare_dataset(load_dataset(spec, plan.label_column), plan.skyline));
    log << "dataset " << datasets.back().data.name << ": n=" << datasets.back().data.size()
        << " K=" << datasets.back().data.num_actions << " skyline=" << cell(datasets.back().skyline) << '\n';
  }
  const std::vector<ResultRecord> records = run_sweep(datasets, plan.config);

  std::filesystem::path out = config.has("output") ? std::filesystem::path(*config.get("output"))
                                                   : plan.output_dir / "results.csv";
  if (out.has_parent_path()) std::filesystem::create_directories(out.parent_path());
  write_results_csv(records, out);

  std::size_t ok = 0, skipped = 0, errors = 0;
  for (const auto& r : records) {
    if (r.status == RecordStatus::ok) ++ok;
    if (r.status == RecordStatus::skipped) ++skipped;
    if (r.status == RecordStatus::error) ++errors;
  }
  log << "wrote " << records.size() << " rows (" << ok << " ok, " << skipped << " skipped, " << errors
      << " errors) to " << out.string() << '\n';
  return out;
}

void cmd_cdf(const std::filesystem::path& results_csv, CdfGrouping grouping, std::ostream& out) {
  const auto records = read_results_csv(results_csv);
  const auto rows = cdf_table(records, grouping);
  write_cdf_csv(rows, out);
}

void cmd_ucb_demo(double delta, std::size_t ns, std::size_t nb, bool shifted_log, std::ostream& out) {
  const UcbResult r = run_ucb_warmstart(delta, ns, nb, {shifted_log});
  out << "delta=" << cell(delta) << '\n'
      << "ns=" << ns << '\n'
      << "nb=" << nb << '\n'
      << "first_arm2_round=" << r.first_arm2_round << '\n'
      << "regret_at_first_play=" << cell(r.regret_at_first_play) << '\n'
      << "cumulative_regret=" << cell(r.cumulative_regret) << '\n'
      << "inequality_held=" << (r.inequality_held ? "true" : "false") << '\n';
}

void cmd_bounds(const BoundsRequest& req, std::ostream& out) {
  validate(req.params);
  auto guarded = [](auto&& f) -> std::string {
    try {
      return cell(f());
    } catch (const Error& e) {
      if (e.code() != Errc::degenerate_bound) throw;
      return "degenerate";
    }
  };
  out << "lambda,V_t,G_t,G_bar_t,W_t,H_t\n";
  for (double lambda : req.grid) {
    out << cell(lambda) << ',' << guarded([&] { return v_t(lambda, req.t, req.params); }) << ','
        << guarded([&] { return g_t(lambda, req.alpha, req.delta_sim, req.t, req.params); }) << ','
        << guarded([&] { return g_bar(lambda, req.alpha, req.delta_sim, req.t, req.params); }) << ','
        << guarded([&] { return w_t(lambda, req.t, req.params); }) << ','
        << guarded([&] { return h_t(lambda, req.alpha, req.delta_sim, req.t, req.params); }) << '\n';
  }
  out << "arrow_regret_bound=" << guarded([&] { return arrow_regret_bound(req.params, req.alpha, req.delta_sim, req.grid); }) << '\n'
      << "supgt_regret_bound=" << guarded([&] { return supgt_regret_bound(req.params, req.alpha, req.delta_sim, req.grid); }) << '\n'
      << "lambda0_bandit=" << cell(lambda0_bandit(req.params.epsilon, req.params.num_actions)) << '\n'
      << "lambda0_sup="
      << guarded([&] { return lambda0_sup(req.params.nb, req.params.epsilon, req.params.ns, req.params.num_actions); })
      << '\n';
}

void cmd_similarity(const std::filesystem::path& instance, double alpha, double delta, std::ostream& out) {
  const SimilarityInstance inst = load_instance(instance);
  const bool similar = check_similarity(inst.d1, inst.d2, inst.policy_class, {alpha, delta});
  const double min_delta = min_delta_for_alpha(inst.d1, inst.d2, inst.policy_class, alpha);
  out << "alpha=" << cell(alpha) << '\n'
      << "delta=" << cell(delta) << '\n'
      << "policies=" << inst.policy_class.size() << '\n'
      << "similar=" << (similar ? "true" : "false") << '\n'
      << "min_delta=" << cell(min_delta) << '\n';
}

}  // namespace warmcb::cli
