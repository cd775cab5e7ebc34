// swbeam: seedable small-world beamforming simulator CLI.
//
// Subcommands: generate, randbeam, wfb, sweep, metrics, plotdata.
// Every run is reproducible from --seed (or the config base_seed); derived
// component seeds use the splitmix64 scheme in swbeam/rng.hpp.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "swbeam/csv.hpp"
#include "swbeam/experiments.hpp"
#include "swbeam/linkgraph.hpp"
#include "swbeam/metrics.hpp"
#include "swbeam/plotdata.hpp"
#include "swbeam/rng.hpp"
#include "swbeam/topology.hpp"
#include "swbeam/wfb.hpp"

namespace fs = std::filesystem;
using namespace swbeam;

namespace {

// Single-run stream ids (sweeps use their own per-point scheme).
constexpr std::uint64_t kCliSelectStream = 2;
constexpr std::uint64_t kCliOrientStream = 3;
constexpr std::uint64_t kCliTrafficStream = 4;

int env_threads() {
  const char* env = std::getenv("SWBEAM_THREADS");
  if (env == nullptr || *env == '\0') {
    return 0;  // auto
  }
  try {
    const int v = std::stoi(env);
    if (v < 0) {
      throw std::invalid_argument("negative");
    }
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("SWBEAM_THREADS must be a non-negative integer");
  }
}

void write_single_report(const MetricsReport& report, const fs::path& out) {
  write_text_file(out, MetricsReport::csv_header() + '\n' + report.csv_row() + '\n');
}

int cmd_generate(int nodes, double width, double height, std::uint64_t seed,
                 double range, const fs::path& out) {
  const Topology topo = generate_topology(nodes, width, height, seed, range);
  save_topology(topo, out);
  std::cout << "wrote " << out.string() << " and "
            << topology_meta_path(out).string() << "\n";
  return 0;
}

int cmd_randbeam(const fs::path& topo_path, double p, const std::string& model,
                 double alpha, bool calibrated, std::optional<double> theta,
                 std::uint64_t seed, const fs::path& out,
                 const std::optional<fs::path>& edges_out) {
  const Topology topo = load_topology(topo_path);
  const AntennaModel antenna_model =
      model == "ula" ? AntennaModel::Ula : AntennaModel::Sector;

  const auto grid = default_beamwidth_grid();
  const double theta_star =
      theta ? *theta : global_optimal_beamwidth(topo, grid);

  const auto beamformers = choose_beamformers(
      topo.size(), p, derive_seed(seed, kCliSelectStream));
  const auto configs = randomized_beam_configs(
      topo, beamformers, antenna_model, theta_star, alpha, calibrated,
      derive_seed(seed, kCliOrientStream));

  MetricsReport report;
  report.seed = topo.seed;
  report.n = topo.size();
  report.width = topo.width;
  report.height = topo.height;
  report.model = to_string(antenna_model);
  report.p = p;
  report.diameter = euclidean_diameter(topo);
  report.beamformer_frac = static_cast<double>(beamformers.size()) / topo.size();

  const DirectedLinkGraph baseline = build_omni_graph(topo);
  double uni0 = 0.0, unreach0 = 0.0;
  measure_graph(baseline, report.baseline_apl, report.baseline_clustering,
                uni0, unreach0);
  const DirectedLinkGraph graph = build_link_graph(topo, configs);
  measure_graph(graph, report.apl, report.clustering,
                report.unidirectional_pair_frac, report.unreachable_pair_frac);

  write_single_report(report, out);
  if (edges_out) {
    save_edge_list(graph, *edges_out);
  }
  return 0;
}

int cmd_wfb(const fs::path& topo_path, double beta, double source_fraction,
            std::uint64_t seed, const fs::path& out,
            const std::optional<fs::path>& events_out,
            const std::optional<fs::path>& decisions_out,
            const std::optional<fs::path>& edges_out,
            const std::vector<double>& theta_grid) {
  const Topology topo = load_topology(topo_path);
  const std::vector<double> grid =
      theta_grid.empty() ? default_beamwidth_grid() : theta_grid;

  const auto flows = generate_traffic(topo, source_fraction,
                                      derive_seed(seed, kCliTrafficStream));
  const WarmupResult warmup = run_warmup(topo, flows);
  for (const Flow& dropped : warmup.dropped_flows) {
    std::cerr << "dropped flow " << dropped.source << "->"
              << dropped.destination << " (unroutable)\n";
  }
  const DecisionResult decisions =
      apply_decisions(topo, warmup.states, beta, grid);

  MetricsReport report;
  report.seed = topo.seed;
  report.n = topo.size();
  report.width = topo.width;
  report.height = topo.height;
  report.model = "sector";
  report.beta = beta;
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
                report.unidirectional_pair_frac, report.unreachable_pair_frac);

  write_single_report(report, out);
  if (events_out) {
    save_event_log(warmup.events, *events_out);
  }
  if (decisions_out) {
    save_decision_log(decisions.log, *decisions_out);
  }
  if (edges_out) {
    save_edge_list(graph, *edges_out);
  }
  return 0;
}

int cmd_sweep(const std::string& study, const fs::path& config_path,
              const fs::path& out,
              const std::optional<fs::path>& decisions_dir) {
  ExperimentConfig cfg = load_experiment_config(config_path);

  StudyKind requested;
  if (study == "rand_p" || study == "rand_p_sweep") {
    requested = StudyKind::RandPSweep;
  } else if (study == "diameter" || study == "diameter_sweep") {
    requested = StudyKind::DiameterSweep;
  } else if (study == "wfb" || study == "wfb_sweep") {
    requested = StudyKind::WfbSweep;
  } else {
    throw std::invalid_argument("unknown study '" + study + "'");
  }
  if (cfg.study_specified && cfg.study != requested) {
    throw std::invalid_argument("--study contradicts the study in " +
                                config_path.string());
  }
  cfg.study = requested;

  const SweepResult result = run_study(cfg, env_threads());
  for (const std::string& note : result.notes) {
    std::cerr << note << "\n";
  }

  write_rows_csv(result, out);
  fs::path agg = out;
  agg.replace_extension();
  agg += "_agg.csv";
  write_aggregates_csv(result, agg);
  if (!result.fits.empty()) {
    write_fits_csv(result, out.parent_path() / "fit.csv");
  }
  if (decisions_dir && !result.decision_logs.empty()) {
    fs::create_directories(*decisions_dir);
    for (std::size_t i = 0; i < result.decision_logs.size(); ++i) {
      save_decision_log(result.decision_logs[i],
                        *decisions_dir / ("decisions_" + std::to_string(i) + ".csv"));
    }
  }
  std::cout << "wrote " << out.string() << " (" << result.rows.size()
            << " rows)\n";
  return 0;
}

int cmd_metrics(const fs::path& topo_path, const fs::path& edges_path,
                const fs::path& out) {
  const Topology topo = load_topology(topo_path);
  const DirectedLinkGraph graph = load_edge_list(edges_path, topo.size());

  MetricsReport report;
  report.seed = topo.seed;
  report.n = topo.size();
  report.width = topo.width;
  report.height = topo.height;
  report.model = "external";
  report.diameter = euclidean_diameter(topo);

  const DirectedLinkGraph baseline = build_omni_graph(topo);
  double uni0 = 0.0, unreach0 = 0.0;
  measure_graph(baseline, report.baseline_apl, report.baseline_clustering,
                uni0, unreach0);
  measure_graph(graph, report.apl, report.clustering,
                report.unidirectional_pair_frac, report.unreachable_pair_frac);

  write_single_report(report, out);
  return 0;
}

int cmd_plotdata(const fs::path& results_path, const std::string& figure,
                 const fs::path& out_dir) {
  const CsvTable table = read_csv(results_path);
  const auto written = emit_plotdata(table, figure, out_dir);
  for (const auto& path : written) {
    std::cout << "wrote " << path.string() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"swbeam: small-world beamforming network simulator"};
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand("generate", "Generate a random topology");
  int gen_nodes = 0;
  double gen_width = 0.0, gen_height = 0.0, gen_range = 1.0;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  generate->add_option("--nodes", gen_nodes, "Node count (>= 2)")->required();
  generate->add_option("--width", gen_width, "Region width")->required();
  generate->add_option("--height", gen_height, "Region height")->required();
  generate->add_option("--seed", gen_seed, "Placement seed");
  generate->add_option("--range", gen_range, "Omni range r (default 1)");
  generate->add_option("--out", gen_out, "Topology CSV path")->required();

  // randbeam
  auto* randbeam =
      app.add_subcommand("randbeam", "Randomized beamforming realization");
  std::string rb_topo, rb_model = "sector", rb_out, rb_edges;
  double rb_p = 0.1, rb_alpha = 2.0, rb_theta = 0.0;
  bool rb_uncalibrated = false;
  std::uint64_t rb_seed = 1;
  randbeam->add_option("--topo", rb_topo, "Topology CSV")->required();
  randbeam->add_option("--p", rb_p, "Beamformer fraction")
      ->check(CLI::Range(0.0, 1.0));
  randbeam->add_option("--model", rb_model, "Antenna model")
      ->check(CLI::IsMember({"sector", "ula"}));
  randbeam->add_option("--alpha", rb_alpha, "ULA path loss exponent");
  randbeam->add_flag("--uncalibrated", rb_uncalibrated,
                     "ULA reach follows r*G^(1/alpha) instead of matching the "
                     "sector beam length at boresight");
  auto* rb_theta_opt = randbeam->add_option(
      "--theta", rb_theta, "Sector beamwidth override in radians");
  randbeam->add_option("--seed", rb_seed, "Beamformer/orientation seed");
  randbeam->add_option("--out", rb_out, "Metrics CSV path")->required();
  randbeam->add_option("--edges", rb_edges, "Optional edge-list CSV path");

  // wfb
  auto* wfb = app.add_subcommand("wfb", "Traffic-driven WFB self-organization");
  std::string wfb_topo, wfb_out, wfb_events, wfb_decisions, wfb_edges;
  double wfb_beta = 0.2, wfb_fraction = 0.5;
  std::uint64_t wfb_seed = 1;
  std::vector<double> wfb_grid;
  wfb->add_option("--topo", wfb_topo, "Topology CSV")->required();
  wfb->add_option("--beta", wfb_beta, "Similarity constant");
  wfb->add_option("--source-fraction", wfb_fraction, "Fraction of source nodes")
      ->check(CLI::Range(0.0, 1.0));
  wfb->add_option("--seed", wfb_seed, "Traffic seed");
  wfb->add_option("--out", wfb_out, "Metrics CSV path")->required();
  wfb->add_option("--events", wfb_events, "Optional event-log CSV path");
  wfb->add_option("--decisions", wfb_decisions, "Optional decision-log CSV path");
  wfb->add_option("--edges", wfb_edges, "Optional edge-list CSV path");
  wfb->add_option("--theta-grid", wfb_grid,
                  "Comma-separated beamwidth candidates (radians)")
      ->delimiter(',');

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Run a configured experiment sweep");
  std::string sweep_study, sweep_config, sweep_out, sweep_decisions_dir;
  sweep->add_option("--study", sweep_study, "rand_p | diameter | wfb")->required();
  sweep->add_option("--config", sweep_config, "Experiment config file")->required();
  sweep->add_option("--out", sweep_out, "Results CSV path")->required();
  sweep->add_option("--decisions-dir", sweep_decisions_dir,
                    "Directory for per-run WFB decision logs");

  // metrics
  auto* metrics = app.add_subcommand("metrics", "Metrics for a stored edge list");
  std::string metrics_topo, metrics_edges, metrics_out;
  metrics->add_option("--topo", metrics_topo, "Topology CSV")->required();
  metrics->add_option("--edges", metrics_edges, "Edge-list CSV")->required();
  metrics->add_option("--out", metrics_out, "Metrics CSV path")->required();

  // plotdata
  auto* plotdata = app.add_subcommand("plotdata", "Emit plot-data series");
  std::string pd_results, pd_figure, pd_out_dir = ".";
  plotdata->add_option("--results", pd_results, "Per-replicate results CSV")
      ->required();
  plotdata->add_option("--figure", pd_figure, "Figure id")
      ->required()
      ->check(CLI::IsMember(known_figures()));
  plotdata->add_option("--out-dir", pd_out_dir, "Output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) {
      return cmd_generate(gen_nodes, gen_width, gen_height, gen_seed, gen_range,
                          gen_out);
    }
    if (randbeam->parsed()) {
      if (rb_model == "ula" && rb_theta_opt->count() > 0) {
        std::cerr << "error: --theta applies to the sector model only\n";
        return 2;
      }
      return cmd_randbeam(rb_topo, rb_p, rb_model, rb_alpha, !rb_uncalibrated,
                          rb_theta_opt->count() > 0
                              ? std::optional<double>(rb_theta)
                              : std::nullopt,
                          rb_seed, rb_out,
                          rb_edges.empty() ? std::nullopt
                                           : std::optional<fs::path>(rb_edges));
    }
    if (wfb->parsed()) {
      auto opt_path = [](const std::string& s) {
        return s.empty() ? std::nullopt : std::optional<fs::path>(s);
      };
      return cmd_wfb(wfb_topo, wfb_beta, wfb_fraction, wfb_seed, wfb_out,
                     opt_path(wfb_events), opt_path(wfb_decisions),
                     opt_path(wfb_edges), wfb_grid);
    }
    if (sweep->parsed()) {
      return cmd_sweep(sweep_study, sweep_config, sweep_out,
                       sweep_decisions_dir.empty()
                           ? std::nullopt
                           : std::optional<fs::path>(sweep_decisions_dir));
    }
    if (metrics->parsed()) {
      return cmd_metrics(metrics_topo, metrics_edges, metrics_out);
    }
    if (plotdata->parsed()) {
      return cmd_plotdata(pd_results, pd_figure, pd_out_dir);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
