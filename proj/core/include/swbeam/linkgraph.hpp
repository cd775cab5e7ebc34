#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <vector>

#include "swbeam/antenna.hpp"
#include "swbeam/topology.hpp"

namespace swbeam {

// Directed communication graph. Adjacency lists are kept sorted by node id
// for deterministic iteration; in-adjacency mirrors out-adjacency.
class DirectedLinkGraph {
 public:
  DirectedLinkGraph() = default;
  explicit DirectedLinkGraph(int n) : out_(n), in_(n) {}

  int size() const { return static_cast<int>(out_.size()); }

  // Inserts v -> u keeping lists sorted; self-loops and duplicates rejected.
  void add_edge(NodeId src, NodeId dst);

  std::span<const NodeId> out_neighbors(NodeId v) const { return out_[v]; }
  std::span<const NodeId> in_neighbors(NodeId v) const { return in_[v]; }

  bool has_edge(NodeId src, NodeId dst) const;

  std::size_t edge_count() const;

  bool operator==(const DirectedLinkGraph& other) const {
    return out_ == other.out_;
  }

 private:
  std::vector<std::vector<NodeId>> out_;
  std::vector<std::vector<NodeId>> in_;
};

// Edge v -> u exists iff u is covered by v's transmit pattern (reception is
// always omnidirectional, so configs[v] shapes only v's out-edges). Throws
// if configs.size() != topo.size().
DirectedLinkGraph build_link_graph(const Topology& topo,
                                   std::span<const AntennaConfig> configs);

// Convenience: the all-omni baseline graph at the topology range.
DirectedLinkGraph build_omni_graph(const Topology& topo);

bool is_symmetric(const DirectedLinkGraph& graph);

// Edge-list CSV `src,dst`, edges in (src, dst) order.
void save_edge_list(const DirectedLinkGraph& graph,
                    const std::filesystem::path& path);

// n_nodes < 0 infers the node count as max id + 1.
DirectedLinkGraph load_edge_list(const std::filesystem::path& path,
                                 int n_nodes = -1);

}  // namespace swbeam
