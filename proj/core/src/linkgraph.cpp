#include "swbeam/linkgraph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "swbeam/csv.hpp"

namespace swbeam {

void DirectedLinkGraph::add_edge(NodeId src, NodeId dst) {
  if (src < 0 || src >= size() || dst < 0 || dst >= size()) {
    throw std::out_of_range("add_edge: node id out of range");
  }
  if (src == dst) {
    throw std::invalid_argument("add_edge: self-loops are not allowed");
  }
  auto insert_sorted = [](std::vector<NodeId>& list, NodeId value) {
    const auto it = std::lower_bound(list.begin(), list.end(), value);
    if (it == list.end() || *it != value) {
      list.insert(it, value);
    }
  };
  insert_sorted(out_[src], dst);
  insert_sorted(in_[dst], src);
}

bool DirectedLinkGraph::has_edge(NodeId src, NodeId dst) const {
  const auto& list = out_[src];
  return std::binary_search(list.begin(), list.end(), dst);
}

std::size_t DirectedLinkGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& list : out_) {
    total += list.size();
  }
  return total;
}

DirectedLinkGraph build_link_graph(const Topology& topo,
                                   std::span<const AntennaConfig> configs) {
  const int n = topo.size();
  if (static_cast<int>(configs.size()) != n) {
    throw std::invalid_argument(
        "build_link_graph: config count " + std::to_string(configs.size()) +
        " does not match node count " + std::to_string(n));
  }
  DirectedLinkGraph graph(n);
  for (NodeId v = 0; v < n; ++v) {
    const Point pv = topo.positions[v];
    for (NodeId u = 0; u < n; ++u) {
      if (u == v) {
        continue;
      }
      if (antenna_covers(configs[v], pv, topo.omni_range, topo.positions[u])) {
        graph.add_edge(v, u);
      }
    }
  }
  return graph;
}

DirectedLinkGraph build_omni_graph(const Topology& topo) {
  const std::vector<AntennaConfig> configs(topo.size(),
                                           OmniAntenna{topo.omni_range});
  return build_link_graph(topo, configs);
}

bool is_symmetric(const DirectedLinkGraph& graph) {
  for (NodeId v = 0; v < graph.size(); ++v) {
    for (NodeId u : graph.out_neighbors(v)) {
      if (!graph.has_edge(u, v)) {
        return false;
      }
    }
  }
  return true;
}

void save_edge_list(const DirectedLinkGraph& graph,
                    const std::filesystem::path& path) {
  std::string csv = "src,dst\n";
  for (NodeId v = 0; v < graph.size(); ++v) {
    for (NodeId u : graph.out_neighbors(v)) {
      csv += std::to_string(v);
      csv += ',';
      csv += std::to_string(u);
      csv += '\n';
    }
  }
  write_text_file(path, csv);
}

DirectedLinkGraph load_edge_list(const std::filesystem::path& path, int n_nodes) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("load_edge_list: cannot open " + path.string());
  }
  std::string line;
  if (!std::getline(in, line) || line != "src,dst") {
    throw std::runtime_error("load_edge_list: bad header in " + path.string());
  }
  std::vector<std::pair<NodeId, NodeId>> edges;
  NodeId max_id = -1;
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    std::istringstream row(line);
    std::string src_str, dst_str;
    if (!std::getline(row, src_str, ',') || !std::getline(row, dst_str)) {
      throw std::runtime_error("load_edge_list: malformed row '" + line + "'");
    }
    const NodeId src = std::stoi(src_str);
    const NodeId dst = std::stoi(dst_str);
    edges.emplace_back(src, dst);
    max_id = std::max({max_id, src, dst});
  }
  const int n = n_nodes >= 0 ? n_nodes : max_id + 1;
  DirectedLinkGraph graph(n);
  for (const auto& [src, dst] : edges) {
    graph.add_edge(src, dst);
  }
  return graph;
}

}  // namespace swbeam
