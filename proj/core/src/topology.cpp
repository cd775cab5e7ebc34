#include "swbeam/topology.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "swbeam/csv.hpp"
#include "swbeam/rng.hpp"

namespace swbeam {

Topology generate_topology(int n_nodes, double width, double height,
                           std::uint64_t seed, double omni_range) {
  if (n_nodes < 2) {
    throw std::invalid_argument("generate_topology: need at least 2 nodes, got " +
                                std::to_string(n_nodes));
  }
  if (!(width > 0.0) || !(height > 0.0)) {
    throw std::invalid_argument("generate_topology: region dimensions must be positive");
  }
  if (!(omni_range > 0.0)) {
    throw std::invalid_argument("generate_topology: omni range must be positive");
  }

  Topology topo;
  topo.width = width;
  topo.height = height;
  topo.omni_range = omni_range;
  topo.seed = seed;
  topo.positions.reserve(n_nodes);

  Rng rng(seed);
  for (int i = 0; i < n_nodes; ++i) {
    const double x = width * rng.next_double();
    const double y = height * rng.next_double();
    topo.positions.push_back({x, y});
  }
  return topo;
}

std::vector<NodeId> omni_neighbors(const Topology& topo, NodeId v) {
  if (v < 0 || v >= topo.size()) {
    throw std::out_of_range("omni_neighbors: node id out of range");
  }
  std::vector<NodeId> result;
  const Point pv = topo.positions[v];
  for (NodeId u = 0; u < topo.size(); ++u) {
    if (u != v && within_range(pv, topo.positions[u], topo.omni_range)) {
      result.push_back(u);
    }
  }
  return result;
}

std::vector<std::vector<NodeId>> omni_adjacency(const Topology& topo) {
  const int n = topo.size();
  std::vector<std::vector<NodeId>> adj(n);
  for (NodeId v = 0; v < n; ++v) {
    for (NodeId u = v + 1; u < n; ++u) {
      if (within_range(topo.positions[v], topo.positions[u], topo.omni_range)) {
        adj[v].push_back(u);
        adj[u].push_back(v);
      }
    }
  }
  return adj;  // lists are sorted by construction
}

double euclidean_diameter(const Topology& topo) {
  if (topo.size() < 2) {
    throw std::invalid_argument("euclidean_diameter: need at least 2 nodes");
  }
  double max_sq = 0.0;
  for (int v = 0; v < topo.size(); ++v) {
    for (int u = v + 1; u < topo.size(); ++u) {
      max_sq = std::max(max_sq,
                        squared_distance(topo.positions[v], topo.positions[u]));
    }
  }
  return std::sqrt(max_sq);
}

double mean_omni_degree(const Topology& topo) {
  const auto adj = omni_adjacency(topo);
  std::size_t total = 0;
  for (const auto& list : adj) {
    total += list.size();
  }
  return static_cast<double>(total) / topo.size();
}

bool omni_graph_connected(const Topology& topo) {
  const int n = topo.size();
  if (n == 0) {
    return true;
  }
  const auto adj = omni_adjacency(topo);
  std::vector<char> seen(n, 0);
  std::queue<NodeId> frontier;
  frontier.push(0);
  seen[0] = 1;
  int visited = 1;
  while (!frontier.empty()) {
    const NodeId v = frontier.front();
    frontier.pop();
    for (NodeId u : adj[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        ++visited;
        frontier.push(u);
      }
    }
  }
  return visited == n;
}

std::filesystem::path topology_meta_path(const std::filesystem::path& csv_path) {
  std::filesystem::path meta = csv_path;
  meta.replace_extension(".meta");
  return meta;
}

void save_topology(const Topology& topo, const std::filesystem::path& csv_path) {
  std::string csv = "node_id,x,y\n";
  for (int i = 0; i < topo.size(); ++i) {
    csv += std::to_string(i);
    csv += ',';
    csv += format_full(topo.positions[i].x);
    csv += ',';
    csv += format_full(topo.positions[i].y);
    csv += '\n';
  }
  write_text_file(csv_path, csv);

  std::string meta;
  meta += "width=" + format_full(topo.width) + '\n';
  meta += "height=" + format_full(topo.height) + '\n';
  meta += "r=" + format_full(topo.omni_range) + '\n';
  meta += "seed=" + std::to_string(topo.seed) + '\n';
  write_text_file(topology_meta_path(csv_path), meta);
}

namespace {

std::string require_meta(const std::filesystem::path& meta_path,
                         const std::string& key,
                         const std::vector<std::pair<std::string, std::string>>& kv) {
  for (const auto& [k, v] : kv) {
    if (k == key) {
      return v;
    }
  }
  throw std::runtime_error("load_topology: missing key '" + key + "' in " +
                           meta_path.string());
}

}  // namespace

Topology load_topology(const std::filesystem::path& csv_path) {
  std::ifstream in(csv_path);
  if (!in) {
    throw std::runtime_error("load_topology: cannot open " + csv_path.string());
  }
  std::string line;
  if (!std::getline(in, line) || line != "node_id,x,y") {
    throw std::runtime_error("load_topology: bad header in " + csv_path.string());
  }

  Topology topo;
  int expected_id = 0;
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    std::istringstream row(line);
    std::string id_str, x_str, y_str;
    if (!std::getline(row, id_str, ',') || !std::getline(row, x_str, ',') ||
        !std::getline(row, y_str)) {
      throw std::runtime_error("load_topology: malformed row '" + line + "'");
    }
    if (std::stoi(id_str) != expected_id) {
      throw std::runtime_error("load_topology: node ids must be dense 0..N-1");
    }
    topo.positions.push_back({std::stod(x_str), std::stod(y_str)});
    ++expected_id;
  }
  if (topo.size() < 2) {
    throw std::runtime_error("load_topology: fewer than 2 nodes in " +
                             csv_path.string());
  }

  const auto meta_path = topology_meta_path(csv_path);
  std::ifstream meta(meta_path);
  if (!meta) {
    throw std::runtime_error("load_topology: missing sidecar " + meta_path.string());
  }
  std::vector<std::pair<std::string, std::string>> kv;
  while (std::getline(meta, line)) {
    if (line.empty()) {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("load_topology: malformed meta line '" + line + "'");
    }
    kv.emplace_back(line.substr(0, eq), line.substr(eq + 1));
  }
  topo.width = std::stod(require_meta(meta_path, "width", kv));
  topo.height = std::stod(require_meta(meta_path, "height", kv));
  topo.omni_range = std::stod(require_meta(meta_path, "r", kv));
  topo.seed = std::stoull(require_meta(meta_path, "seed", kv));
  return topo;
}

}  // namespace swbeam
