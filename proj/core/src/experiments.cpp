#include "swbeam/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstring>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "swbeam/csv.hpp"
#include "swbeam/rng.hpp"

namespace swbeam {

namespace {

// Seed-splitting streams; every randomized component of a run draws from
// derive_seed(derive_seed(derive_seed(base, STREAM), point_key), replicate).
// The point key is the bit pattern of the swept value (p or region side), so
// a sweep point's rows do not depend on the order or presence of other
// points in the config.
constexpr std::uint64_t kStreamTopology = 1;
constexpr std::uint64_t kStreamBeamformers = 2;
constexpr std::uint64_t kStreamOrientations = 3;
constexpr std::uint64_t kStreamTraffic = 4;

std::uint64_t point_key(double swept_value) {
  std::uint64_t bits;
  static_assert(sizeof(bits) == sizeof(swept_value));
  std::memcpy(&bits, &swept_value, sizeof(bits));
  return bits;
}

std::uint64_t task_seed(std::uint64_t base, std::uint64_t stream,
                        std::uint64_t point, std::uint64_t replicate) {
  return derive_seed(derive_seed(derive_seed(base, stream), point), replicate);
}

int resolve_threads(int max_threads, std::size_t task_count) {
  int threads = max_threads;
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) {
      threads = 1;
    }
  }
  return std::max(1, std::min<int>(threads, static_cast<int>(task_count)));
}

// Runs tasks [0, count) on up to `threads` workers; worker i writes only
// slot i outputs, so the merged result is thread-count independent.
template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      fn(i);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= count) {
            return;
          }
          fn(i);
        }
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) {
    th.join();
  }
  for (auto& err : errors) {
    if (err) {
      std::rethrow_exception(err);
    }
  }
}

std::pair<double, double> mean_std(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n == 0) {
    return {0.0, 0.0};
  }
  double mean = 0.0;
  for (double v : values) {
    mean += v;
  }
  mean /= static_cast<double>(n);
  if (n == 1) {
    return {mean, 0.0};
  }
  double ss = 0.0;
  for (double v : values) {
    const double d = v - mean;
    ss += d * d;
  }
  return {mean, std::sqrt(ss / static_cast<double>(n - 1))};
}

AggregateRow aggregate_reports(std::span<const MetricsReport> reports) {
  AggregateRow agg;
  const std::size_t count = reports.size();
  agg.model = reports.front().model;
  agg.p = reports.front().p;
  agg.beta = reports.front().beta;
  agg.n = reports.front().n;
  agg.width = reports.front().width;
  agg.height = reports.front().height;
  agg.replicates = static_cast<int>(count);

  std::vector<double> values(count);
  auto fill = [&](auto getter) -> std::pair<double, double> {
    for (std::size_t i = 0; i < count; ++i) {
      values[i] = getter(reports[i]);
    }
    return mean_std(values);
  };

  std::tie(agg.apl0_mean, agg.apl0_std) =
      fill([](const MetricsReport& r) { return r.baseline_apl; });
  std::tie(agg.apl_mean, agg.apl_std) =
      fill([](const MetricsReport& r) { return r.apl; });
  std::tie(agg.c0_mean, agg.c0_std) =
      fill([](const MetricsReport& r) { return r.baseline_clustering; });
  std::tie(agg.c_mean, agg.c_std) =
      fill([](const MetricsReport& r) { return r.clustering; });
  std::tie(agg.l_ratio_mean, agg.l_ratio_std) =
      fill([](const MetricsReport& r) { return r.apl / r.baseline_apl; });
  std::tie(agg.c_ratio_mean, agg.c_ratio_std) = fill([](const MetricsReport& r) {
    return r.clustering / r.baseline_clustering;
  });
  std::tie(agg.uni_mean, agg.uni_std) =
      fill([](const MetricsReport& r) { return r.unidirectional_pair_frac; });
  std::tie(agg.unreach_mean, agg.unreach_std) =
      fill([](const MetricsReport& r) { return r.unreachable_pair_frac; });
  std::tie(agg.beamformer_mean, agg.beamformer_std) =
      fill([](const MetricsReport& r) { return r.beamformer_frac; });
  std::tie(agg.d_mean, agg.d_std) =
      fill([](const MetricsReport& r) { return r.diameter; });
  return agg;
}

std::vector<double> effective_grid(const ExperimentConfig& cfg) {
  return cfg.theta_candidates.empty() ? default_beamwidth_grid()
                                      : cfg.theta_candidates;
}

void validate_common(const ExperimentConfig& cfg) {
  if (cfg.replicates < 1) {
    throw std::invalid_argument("experiment config: replicates must be >= 1");
  }
  if (!(cfg.omni_range > 0.0)) {
    throw std::invalid_argument("experiment config: omni_range must be positive");
  }
  if (!(cfg.alpha > 0.0)) {
    throw std::invalid_argument("experiment config: alpha must be positive");
  }
  for (double theta : cfg.theta_candidates) {
    if (!(theta > 0.0) || theta > kTwoPi) {
      throw std::invalid_argument(
          "experiment config: theta candidates must lie in (0, 2pi]");
    }
  }
}

void validate_region_sweep(const ExperimentConfig& cfg, std::size_t min_sizes) {
  if (cfg.region_sizes.size() < min_sizes) {
    throw std::invalid_argument("experiment config: need at least " +
                                std::to_string(min_sizes) + " region sizes");
  }
  for (double s : cfg.region_sizes) {
    if (!(s > 0.0)) {
      throw std::invalid_argument("experiment config: region sizes must be positive");
    }
  }
  if (!(cfg.density > 0.0)) {
    throw std::invalid_argument("experiment config: density must be positive");
  }
}

int region_node_count(const ExperimentConfig& cfg, double side) {
  const long n = std::lround(cfg.density * side * side);
  if (n < 2) {
    throw std::invalid_argument(
        "experiment config: density * area yields fewer than 2 nodes");
  }
  return static_cast<int>(n);
}

MetricsReport randomized_instance(const Topology& topo, AntennaModel model,
                                  double p, const ExperimentConfig& cfg,
                                  std::span<const double> grid,
                                  std::uint64_t select_seed,
                                  std::uint64_t orient_seed) {
  MetricsReport report;
  report.seed = topo.seed;
  report.n = topo.size();
  report.width = topo.width;
  report.height = topo.height;
  report.model = to_string(model);
  report.p = p;
  report.beta = 0.0;
  report.diameter = euclidean_diameter(topo);

  const DirectedLinkGraph baseline = build_omni_graph(topo);
  double uni0 = 0.0, unreach0 = 0.0;
  measure_graph(baseline, report.baseline_apl, report.baseline_clustering,
                uni0, unreach0);

  const auto beamformers = choose_beamformers(topo.size(), p, select_seed);
  report.beamformer_frac =
      static_cast<double>(beamformers.size()) / topo.size();

  if (beamformers.empty()) {
    report.apl = report.baseline_apl;
    report.clustering = report.baseline_clustering;
    report.unidirectional_pair_frac = uni0;
    report.unreachable_pair_frac = unreach0;
    return report;
  }

  const double theta_star = global_optimal_beamwidth(topo, grid);
  const auto configs =
      randomized_beam_configs(topo, beamformers, model, theta_star, cfg.alpha,
                              cfg.ula_calibrated, orient_seed);
  const DirectedLinkGraph graph = build_link_graph(topo, configs);
  measure_graph(graph, report.apl, report.clustering,
                report.unidirectional_pair_frac, report.unreachable_pair_frac);
  return report;
}

}  // namespace

std::string to_string(StudyKind study) {
  switch (study) {
    case StudyKind::RandPSweep:
      return "rand_p_sweep";
    case StudyKind::DiameterSweep:
      return "diameter_sweep";
    case StudyKind::WfbSweep:
      return "wfb_sweep";
  }
  return "unknown";
}

std::string to_string(AntennaModel model) {
  return model == AntennaModel::Sector ? "sector" : "ula";
}

Topology connected_topology(int n_nodes, double width, double height,
                            std::uint64_t seed, double omni_range,
                            std::vector<std::string>& notes) {
  for (std::uint64_t s = seed;; ++s) {
    Topology topo = generate_topology(n_nodes, width, height, s, omni_range);
    if (omni_graph_connected(topo)) {
      return topo;
    }
    notes.push_back("resample: seed " + std::to_string(s) +
                    " gave a disconnected omni graph; retrying with seed " +
                    std::to_string(s + 1));
  }
}

std::vector<NodeId> choose_beamformers(int n_nodes, double p,
                                       std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) {
    throw std::invalid_argument("choose_beamformers: p must be in [0, 1]");
  }
  const int k = std::clamp(
      static_cast<int>(std::ceil(p * static_cast<double>(n_nodes) - 1e-9)), 0,
      n_nodes);
  std::vector<NodeId> ids(n_nodes);
  std::iota(ids.begin(), ids.end(), 0);
  Rng rng(seed);
  for (int i = 0; i < k; ++i) {
    const std::size_t j = i + rng.next_index(static_cast<std::size_t>(n_nodes - i));
    std::swap(ids[i], ids[j]);
  }
  std::vector<NodeId> chosen(ids.begin(), ids.begin() + k);
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

std::vector<AntennaConfig> randomized_beam_configs(
    const Topology& topo, std::span<const NodeId> beamformers,
    AntennaModel model, double theta_star, double alpha, bool ula_calibrated,
    std::uint64_t orientation_seed) {
  const double r = topo.omni_range;
  const double length = sector_beam_length(theta_star, r);
  std::vector<AntennaConfig> configs(topo.size(), OmniAntenna{r});
  Rng rng(orientation_seed);
  for (NodeId v : beamformers) {
    const double orientation = kTwoPi * rng.next_double();
    if (model == AntennaModel::Sector) {
      configs[v] = SectorAntenna{theta_star, length, orientation};
    } else {
      const int m = map_sector_to_ula(length, r);
      configs[v] = UlaAntenna{m, orientation, alpha,
                              ula_calibrated ? length : 0.0};
    }
  }
  return configs;
}

double global_optimal_beamwidth(const Topology& topo,
                                std::span<const double> theta_candidates) {
  const std::vector<double> fallback =
      theta_candidates.empty() ? default_beamwidth_grid() : std::vector<double>();
  const std::span<const double> grid =
      theta_candidates.empty() ? std::span<const double>(fallback)
                               : theta_candidates;
  return optimal_beamwidth(grid, topo.omni_range, mean_omni_degree(topo));
}

SweepResult run_rand_p_sweep(const ExperimentConfig& cfg, int max_threads) {
  validate_common(cfg);
  if (cfg.p_values.empty()) {
    throw std::invalid_argument("experiment config: p_values must be non-empty");
  }
  for (double p : cfg.p_values) {
    if (p < 0.0 || p > 1.0) {
      throw std::invalid_argument("experiment config: p values must be in [0, 1]");
    }
  }
  if (cfg.n_nodes < 2 || !(cfg.width > 0.0) || !(cfg.height > 0.0)) {
    throw std::invalid_argument("experiment config: invalid region / node count");
  }

  const auto grid = effective_grid(cfg);
  const std::size_t points = cfg.p_values.size();
  const std::size_t reps = static_cast<std::size_t>(cfg.replicates);
  const std::size_t tasks = points * reps;

  SweepResult result;
  result.rows.resize(tasks);
  std::vector<std::vector<std::string>> task_notes(tasks);

  parallel_for(tasks, resolve_threads(max_threads, tasks), [&](std::size_t t) {
    const std::size_t point = t / reps;
    const std::size_t rep = t % reps;
    const double p = cfg.p_values[point];
    // Topology stream depends only on the replicate so every p value sees
    // the same network (paired design).
    const Topology topo = [&] {
      std::vector<std::string>& notes = task_notes[t];
      return connected_topology(cfg.n_nodes, cfg.width, cfg.height,
                                task_seed(cfg.base_seed, kStreamTopology, 0, rep),
                                cfg.omni_range, notes);
    }();
    result.rows[t] = randomized_instance(
        topo, cfg.model, p, cfg, grid,
        task_seed(cfg.base_seed, kStreamBeamformers, point_key(p), rep),
        task_seed(cfg.base_seed, kStreamOrientations, point_key(p), rep));
  });

  for (auto& notes : task_notes) {
    result.notes.insert(result.notes.end(), notes.begin(), notes.end());
  }
  for (std::size_t point = 0; point < points; ++point) {
    result.aggregates.push_back(aggregate_reports(
        std::span<const MetricsReport>(result.rows).subspan(point * reps, reps)));
  }
  return result;
}

SweepResult run_diameter_sweep(const ExperimentConfig& cfg, int max_threads) {
  validate_common(cfg);
  validate_region_sweep(cfg, 3);
  if (cfg.p < 0.0 || cfg.p > 1.0) {
    throw std::invalid_argument("experiment config: p must be in [0, 1]");
  }

  const auto grid = effective_grid(cfg);
  const std::size_t points = cfg.region_sizes.size();
  const std::size_t reps = static_cast<std::size_t>(cfg.replicates);
  const std::size_t tasks = points * reps;

  SweepResult result;
  result.rows.resize(tasks);
  std::vector<std::vector<std::string>> task_notes(tasks);

  parallel_for(tasks, resolve_threads(max_threads, tasks), [&](std::size_t t) {
    const std::size_t point = t / reps;
    const std::size_t rep = t % reps;
    const double side = cfg.region_sizes[point];
    const int n_nodes = region_node_count(cfg, side);
    const Topology topo = connected_topology(
        n_nodes, side, side,
        task_seed(cfg.base_seed, kStreamTopology, point_key(side), rep),
        cfg.omni_range, task_notes[t]);
    result.rows[t] = randomized_instance(
        topo, cfg.model, cfg.p, cfg, grid,
        task_seed(cfg.base_seed, kStreamBeamformers, point_key(side), rep),
        task_seed(cfg.base_seed, kStreamOrientations, point_key(side), rep));
  });

  for (auto& notes : task_notes) {
    result.notes.insert(result.notes.end(), notes.begin(), notes.end());
  }
  std::vector<std::pair<double, double>> fit_points;
  for (std::size_t point = 0; point < points; ++point) {
    result.aggregates.push_back(aggregate_reports(
        std::span<const MetricsReport>(result.rows).subspan(point * reps, reps)));
    fit_points.emplace_back(result.aggregates.back().d_mean,
                            result.aggregates.back().apl_mean);
  }
  const FitResult log_fit = log_growth_fit(fit_points);
  const FitResult lin_fit = linear_fit(fit_points);
  result.fits.push_back(
      {to_string(cfg.study) + "_log", log_fit.slope, log_fit.intercept,
       log_fit.r_squared});
  result.fits.push_back(
      {to_string(cfg.study) + "_linear", lin_fit.slope, lin_fit.intercept,
       lin_fit.r_squared});
  return result;
}

SweepResult run_wfb_sweep(const ExperimentConfig& cfg, int max_threads) {
  validate_common(cfg);
  validate_region_sweep(cfg, 1);
  if (cfg.beta < 0.0) {
    throw std::invalid_argument("experiment config: beta must be >= 0");
  }
  if (!(cfg.source_fraction > 0.0) || cfg.source_fraction > 1.0) {
    throw std::invalid_argument(
        "experiment config: source_fraction must be in (0, 1]");
  }

  const auto grid = effective_grid(cfg);
  const std::size_t points = cfg.region_sizes.size();
  const std::size_t reps = static_cast<std::size_t>(cfg.replicates);
  const std::size_t tasks = points * reps;

  SweepResult result;
  result.rows.resize(tasks);
  result.decision_logs.resize(tasks);
  std::vector<std::vector<std::string>> task_notes(tasks);

  parallel_for(tasks, resolve_threads(max_threads, tasks), [&](std::size_t t) {
    const std::size_t point = t / reps;
    const std::size_t rep = t % reps;
    const double side = cfg.region_sizes[point];
    const int n_nodes = region_node_count(cfg, side);
    std::vector<std::string>& notes = task_notes[t];

    const Topology topo = connected_topology(
        n_nodes, side, side,
        task_seed(cfg.base_seed, kStreamTopology, point_key(side), rep),
        cfg.omni_range, notes);

    const auto flows = generate_traffic(
        topo, cfg.source_fraction,
        task_seed(cfg.base_seed, kStreamTraffic, point_key(side), rep));
    const WarmupResult warmup = run_warmup(topo, flows);
    for (const Flow& dropped : warmup.dropped_flows) {
      notes.push_back("dropped flow " + std::to_string(dropped.source) + "->" +
                      std::to_string(dropped.destination) + " (unroutable)");
    }
    const DecisionResult decisions =
        apply_decisions(topo, warmup.states, cfg.beta, grid);

    MetricsReport report;
    report.seed = topo.seed;
    report.n = topo.size();
    report.width = topo.width;
    report.height = topo.height;
    report.model = "sector";
    report.beta = cfg.beta;
    report.diameter = euclidean_diameter(topo);
    report.beamformer_frac =
        static_cast<double>(decisions.beamformer_count) / topo.size();
    report.p = report.beamformer_frac;

    const DirectedLinkGraph baseline = build_omni_graph(topo);
    double uni0 = 0.0, unreach0 = 0.0;
    measure_graph(baseline, report.baseline_apl, report.baseline_clustering,
                  uni0, unreach0);
    const DirectedLinkGraph graph = build_link_graph(topo, decisions.configs);
    measure_graph(graph, report.apl, report.clustering,
                  report.unidirectional_pair_frac,
                  report.unreachable_pair_frac);

    result.rows[t] = report;
    result.decision_logs[t] = decisions.log;
  });

  for (auto& notes : task_notes) {
    result.notes.insert(result.notes.end(), notes.begin(), notes.end());
  }
  for (std::size_t point = 0; point < points; ++point) {
    result.aggregates.push_back(aggregate_reports(
        std::span<const MetricsReport>(result.rows).subspan(point * reps, reps)));
  }
  return result;
}

SweepResult run_study(const ExperimentConfig& cfg, int max_threads) {
  switch (cfg.study) {
    case StudyKind::RandPSweep:
      return run_rand_p_sweep(cfg, max_threads);
    case StudyKind::DiameterSweep:
      return run_diameter_sweep(cfg, max_threads);
    case StudyKind::WfbSweep:
      return run_wfb_sweep(cfg, max_threads);
  }
  throw std::logic_error("run_study: unknown study kind");
}

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) {
    return "";
  }
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<double> parse_double_list(const std::string& value,
                                      const std::string& key) {
  std::vector<double> out;
  std::istringstream in(value);
  std::string item;
  while (std::getline(in, item, ',')) {
    const std::string token = trim(item);
    if (token.empty()) {
      throw std::invalid_argument("experiment config: empty entry in list '" +
                                  key + "'");
    }
    out.push_back(std::stod(token));
  }
  if (out.empty()) {
    throw std::invalid_argument("experiment config: list '" + key + "' is empty");
  }
  return out;
}

bool parse_bool(const std::string& value, const std::string& key) {
  if (value == "true" || value == "1") {
    return true;
  }
  if (value == "false" || value == "0") {
    return false;
  }
  throw std::invalid_argument("experiment config: bad boolean for '" + key +
                              "': " + value);
}

}  // namespace

ExperimentConfig parse_experiment_config(std::istream& in) {
  ExperimentConfig cfg;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("experiment config line " +
                                  std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (value.empty()) {
      throw std::invalid_argument("experiment config: empty value for '" + key + "'");
    }

    if (key == "study") {
      if (value == "rand_p_sweep" || value == "rand_p") {
        cfg.study = StudyKind::RandPSweep;
      } else if (value == "diameter_sweep" || value == "diameter") {
        cfg.study = StudyKind::DiameterSweep;
      } else if (value == "wfb_sweep" || value == "wfb") {
        cfg.study = StudyKind::WfbSweep;
      } else {
        throw std::invalid_argument("experiment config: unknown study '" + value + "'");
      }
      cfg.study_specified = true;
    } else if (key == "n_nodes") {
      cfg.n_nodes = std::stoi(value);
    } else if (key == "width") {
      cfg.width = std::stod(value);
    } else if (key == "height") {
      cfg.height = std::stod(value);
    } else if (key == "density") {
      cfg.density = std::stod(value);
    } else if (key == "region_sizes") {
      cfg.region_sizes = parse_double_list(value, key);
    } else if (key == "p_values") {
      cfg.p_values = parse_double_list(value, key);
    } else if (key == "p") {
      cfg.p = std::stod(value);
    } else if (key == "model") {
      if (value == "sector") {
        cfg.model = AntennaModel::Sector;
      } else if (value == "ula") {
        cfg.model = AntennaModel::Ula;
      } else {
        throw std::invalid_argument("experiment config: unknown model '" + value + "'");
      }
    } else if (key == "alpha") {
      cfg.alpha = std::stod(value);
    } else if (key == "ula_calibrated") {
      cfg.ula_calibrated = parse_bool(value, key);
    } else if (key == "beta") {
      cfg.beta = std::stod(value);
    } else if (key == "source_fraction") {
      cfg.source_fraction = std::stod(value);
    } else if (key == "theta_candidates") {
      if (value != "auto") {
        cfg.theta_candidates = parse_double_list(value, key);
      }
    } else if (key == "replicates") {
      cfg.replicates = std::stoi(value);
    } else if (key == "base_seed") {
      cfg.base_seed = std::stoull(value);
    } else if (key == "omni_range") {
      cfg.omni_range = std::stod(value);
    } else {
      throw std::invalid_argument("experiment config: unknown key '" + key + "'");
    }
  }
  return cfg;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open experiment config " + path.string());
  }
  return parse_experiment_config(in);
}

std::string AggregateRow::csv_header() {
  return "model,p,beta,n,width,height,replicates,"
         "apl0_mean,apl0_std,apl_mean,apl_std,c0_mean,c0_std,c_mean,c_std,"
         "l_ratio_mean,l_ratio_std,c_ratio_mean,c_ratio_std,"
         "uni_mean,uni_std,unreach_mean,unreach_std,"
         "beamformer_mean,beamformer_std,d_mean,d_std";
}

std::string AggregateRow::csv_row() const {
  std::string row = model;
  const double vals[] = {p,
                         beta,
                         static_cast<double>(n),
                         width,
                         height,
                         static_cast<double>(replicates),
                         apl0_mean,
                         apl0_std,
                         apl_mean,
                         apl_std,
                         c0_mean,
                         c0_std,
                         c_mean,
                         c_std,
                         l_ratio_mean,
                         l_ratio_std,
                         c_ratio_mean,
                         c_ratio_std,
                         uni_mean,
                         uni_std,
                         unreach_mean,
                         unreach_std,
                         beamformer_mean,
                         beamformer_std,
                         d_mean,
                         d_std};
  for (double v : vals) {
    row += ',' + format_full(v);
  }
  return row;
}

void write_rows_csv(const SweepResult& result, const std::filesystem::path& path) {
  std::string csv = MetricsReport::csv_header() + '\n';
  for (const MetricsReport& row : result.rows) {
    csv += row.csv_row();
    csv += '\n';
  }
  write_text_file(path, csv);
}

void write_aggregates_csv(const SweepResult& result,
                          const std::filesystem::path& path) {
  std::string csv = AggregateRow::csv_header() + '\n';
  for (const AggregateRow& row : result.aggregates) {
    csv += row.csv_row();
    csv += '\n';
  }
  write_text_file(path, csv);
}

void write_fits_csv(const SweepResult& result, const std::filesystem::path& path) {
  std::string csv = "study,slope,intercept,r2\n";
  for (const FitRow& fit : result.fits) {
    csv += fit.study;
    csv += ',' + format_full(fit.slope);
    csv += ',' + format_full(fit.intercept);
    csv += ',' + format_full(fit.r_squared);
    csv += '\n';
  }
  write_text_file(path, csv);
}

}  // namespace swbeam
