#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "swbeam/metrics.hpp"
#include "swbeam/wfb.hpp"

namespace swbeam {

enum class StudyKind { RandPSweep, DiameterSweep, WfbSweep };
enum class AntennaModel { Sector, Ula };

std::string to_string(StudyKind study);
std::string to_string(AntennaModel model);

// Parsed `key = value` experiment description; see docs/experiments.md for
// the schema. Lists are comma-separated.
struct ExperimentConfig {
  StudyKind study = StudyKind::RandPSweep;
  bool study_specified = false;  // true when the config file names a study

  // rand_p_sweep geometry
  int n_nodes = 300;
  double width = 10.0;
  double height = 10.0;

  // diameter_sweep / wfb_sweep geometry: square regions at constant density
  double density = 3.0;
  std::vector<double> region_sizes;

  std::vector<double> p_values;  // rand_p_sweep
  double p = 1.0;                // diameter_sweep

  AntennaModel model = AntennaModel::Sector;
  double alpha = 2.0;
  bool ula_calibrated = true;

  double beta = 0.2;
  double source_fraction = 0.5;

  std::vector<double> theta_candidates;  // empty = default grid
  int replicates = 20;
  std::uint64_t base_seed = 1;
  double omni_range = 1.0;
};

ExperimentConfig parse_experiment_config(std::istream& in);
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

// Mean/stddev of every metric over the replicates of one sweep point.
struct AggregateRow {
  std::string model;
  double p = 0.0;
  double beta = 0.0;
  int n = 0;
  double width = 0.0;
  double height = 0.0;
  int replicates = 0;
  double apl0_mean = 0.0, apl0_std = 0.0;
  double apl_mean = 0.0, apl_std = 0.0;
  double c0_mean = 0.0, c0_std = 0.0;
  double c_mean = 0.0, c_std = 0.0;
  double l_ratio_mean = 0.0, l_ratio_std = 0.0;
  double c_ratio_mean = 0.0, c_ratio_std = 0.0;
  double uni_mean = 0.0, uni_std = 0.0;
  double unreach_mean = 0.0, unreach_std = 0.0;
  double beamformer_mean = 0.0, beamformer_std = 0.0;
  double d_mean = 0.0, d_std = 0.0;

  static std::string csv_header();
  std::string csv_row() const;
};

struct FitRow {
  std::string study;
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

struct SweepResult {
  std::vector<MetricsReport> rows;        // (point, replicate) order
  std::vector<AggregateRow> aggregates;   // point order
  std::vector<FitRow> fits;               // diameter sweeps only
  std::vector<std::vector<DecisionRecord>> decision_logs;  // wfb sweeps only
  std::vector<std::string> notes;         // resample / drop diagnostics
};

// max_threads <= 0 selects hardware concurrency. Output is byte-identical
// for a given config regardless of the thread count.
SweepResult run_rand_p_sweep(const ExperimentConfig& cfg, int max_threads = 1);
SweepResult run_diameter_sweep(const ExperimentConfig& cfg, int max_threads = 1);
SweepResult run_wfb_sweep(const ExperimentConfig& cfg, int max_threads = 1);
SweepResult run_study(const ExperimentConfig& cfg, int max_threads = 1);

void write_rows_csv(const SweepResult& result, const std::filesystem::path& path);
void write_aggregates_csv(const SweepResult& result,
                          const std::filesystem::path& path);
void write_fits_csv(const SweepResult& result, const std::filesystem::path& path);

// -- building blocks shared with the CLI ------------------------------------

// Resamples `seed` (incrementing it) until the omni graph is connected.
// Appends one note line per resample. Returns the final topology; its seed
// field records the seed that produced it.
Topology connected_topology(int n_nodes, double width, double height,
                            std::uint64_t seed, double omni_range,
                            std::vector<std::string>& notes);

// ceil(p * n) distinct beamformer ids, ascending.
std::vector<NodeId> choose_beamformers(int n_nodes, double p, std::uint64_t seed);

// Antenna assignment for one randomized-beamforming realization: the chosen
// nodes get Sector(theta_star, r(theta_star), random orientation) or the
// equivalent ULA; everyone else stays omni.
std::vector<AntennaConfig> randomized_beam_configs(
    const Topology& topo, std::span<const NodeId> beamformers,
    AntennaModel model, double theta_star, double alpha, bool ula_calibrated,
    std::uint64_t orientation_seed);

// Global theta* from the network mean omni degree over the config grid
// (empty grid = default grid).
double global_optimal_beamwidth(const Topology& topo,
                                std::span<const double> theta_candidates);

}  // namespace swbeam
