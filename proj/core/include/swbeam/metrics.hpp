#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "swbeam/linkgraph.hpp"

namespace swbeam {

// Dense all-pairs hop-count matrix; -1 marks unreachable.
struct HopMatrix {
  int n = 0;
  std::vector<std::int32_t> hops;

  std::int32_t at(NodeId src, NodeId dst) const {
    return hops[static_cast<std::size_t>(src) * n + dst];
  }
  bool reachable(NodeId src, NodeId dst) const { return at(src, dst) >= 0; }
};

// Per-source BFS over the directed graph.
HopMatrix all_pairs_hop_distances(const DirectedLinkGraph& graph);

// Mean hop distance over ordered reachable pairs (diagonal excluded).
// Throws if no ordered pair is reachable.
double average_path_length(const HopMatrix& m);
double average_path_length(const DirectedLinkGraph& graph);

// Fraction of ordered pairs (u, v), u != v, with no directed path u -> v.
double unreachable_pair_fraction(const HopMatrix& m);

// Fraction of unordered pairs {u, v} reachable in exactly one direction.
double unidirectional_pair_fraction(const HopMatrix& m);
double unidirectional_pair_fraction(const DirectedLinkGraph& graph);

// Mean over all nodes of out-neighborhood transitivity: for out-degree d >= 2,
// (ordered out-neighbor pairs (a, b) with edge a -> b) / (d (d - 1)); nodes
// with d < 2 contribute 0. Reduces to the Watts-Strogatz coefficient on
// symmetric graphs.
double clustering_coefficient(const DirectedLinkGraph& graph);

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

// Least-squares y against x. Zero x-variance is rejected; zero y-variance
// yields slope 0 and r^2 = 0 by convention.
FitResult linear_fit(std::span<const std::pair<double, double>> points);

// Least-squares apl against ln(D). Requires >= 3 points with distinct D.
FitResult log_growth_fit(std::span<const std::pair<double, double>> points);

// One sweep-row worth of small-world statistics.
struct MetricsReport {
  std::uint64_t seed = 0;
  int n = 0;
  double width = 0.0;
  double height = 0.0;
  std::string model;   // "sector" | "ula" | "omni" | "external"
  double p = 0.0;
  double beta = 0.0;
  double baseline_apl = 0.0;        // L(0)
  double apl = 0.0;                 // L(p)
  double baseline_clustering = 0.0; // C(0)
  double clustering = 0.0;          // C(p)
  double unidirectional_pair_frac = 0.0;
  double unreachable_pair_frac = 0.0;
  double beamformer_frac = 0.0;
  double diameter = 0.0;            // D

  static std::string csv_header();
  std::string csv_row() const;
};

// Fills the graph-derived fields (apl, clustering, unreachable and
// unidirectional fractions) of a report from one hop matrix pass.
void measure_graph(const DirectedLinkGraph& graph, double& apl_out,
                   double& clustering_out, double& uni_out,
                   double& unreach_out);

}  // namespace swbeam
