#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "swbeam/geometry.hpp"

namespace swbeam {

using NodeId = std::int32_t;

// Static node placement in a rectangular region plus the shared
// omnidirectional range r. Immutable after construction.
struct Topology {
  std::vector<Point> positions;
  double width = 0.0;
  double height = 0.0;
  double omni_range = 1.0;
  std::uint64_t seed = 0;

  int size() const { return static_cast<int>(positions.size()); }
};

// n_nodes i.i.d. uniform positions over [0,width) x [0,height); pure
// function of its arguments.
Topology generate_topology(int n_nodes, double width, double height,
                           std::uint64_t seed, double omni_range = 1.0);

// All u != v with distance(u, v) <= r, ascending id.
std::vector<NodeId> omni_neighbors(const Topology& topo, NodeId v);

// Per-node sorted omni neighbor lists (undirected disc graph).
std::vector<std::vector<NodeId>> omni_adjacency(const Topology& topo);

// Maximum pairwise Euclidean distance (exhaustive scan).
double euclidean_diameter(const Topology& topo);

double mean_omni_degree(const Topology& topo);

// True iff the omnidirectional disc graph is connected.
bool omni_graph_connected(const Topology& topo);

// CSV `node_id,x,y` plus a `.meta` sidecar (same basename) carrying
// width/height/r/seed. Coordinates use 17 significant digits so that
// save -> load -> save is byte-identical.
void save_topology(const Topology& topo, const std::filesystem::path& csv_path);
Topology load_topology(const std::filesystem::path& csv_path);

std::filesystem::path topology_meta_path(const std::filesystem::path& csv_path);

}  // namespace swbeam
