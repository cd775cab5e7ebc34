#include "swbeam/metrics.hpp"

#include <cmath>
#include <cstdint>
#include <queue>
#include <stdexcept>

#include "swbeam/csv.hpp"

namespace swbeam {

HopMatrix all_pairs_hop_distances(const DirectedLinkGraph& graph) {
  const int n = graph.size();
  HopMatrix m;
  m.n = n;
  m.hops.assign(static_cast<std::size_t>(n) * n, -1);

  std::vector<NodeId> queue;
  queue.reserve(n);
  for (NodeId src = 0; src < n; ++src) {
    auto* row = &m.hops[static_cast<std::size_t>(src) * n];
    row[src] = 0;
    queue.clear();
    queue.push_back(src);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const NodeId v = queue[head];
      const std::int32_t next = row[v] + 1;
      for (NodeId u : graph.out_neighbors(v)) {
        if (row[u] < 0) {
          row[u] = next;
          queue.push_back(u);
        }
      }
    }
  }
  return m;
}

double average_path_length(const HopMatrix& m) {
  std::int64_t total = 0;
  std::int64_t count = 0;
  for (NodeId src = 0; src < m.n; ++src) {
    for (NodeId dst = 0; dst < m.n; ++dst) {
      if (src == dst) {
        continue;
      }
      const std::int32_t h = m.at(src, dst);
      if (h >= 0) {
        total += h;
        ++count;
      }
    }
  }
  if (count == 0) {
    throw std::runtime_error("average_path_length: no reachable ordered pairs");
  }
  return static_cast<double>(total) / static_cast<double>(count);
}

double average_path_length(const DirectedLinkGraph& graph) {
  return average_path_length(all_pairs_hop_distances(graph));
}

double unreachable_pair_fraction(const HopMatrix& m) {
  if (m.n < 2) {
    return 0.0;
  }
  std::int64_t unreachable = 0;
  for (NodeId src = 0; src < m.n; ++src) {
    for (NodeId dst = 0; dst < m.n; ++dst) {
      if (src != dst && m.at(src, dst) < 0) {
        ++unreachable;
      }
    }
  }
  const std::int64_t pairs = static_cast<std::int64_t>(m.n) * (m.n - 1);
  return static_cast<double>(unreachable) / static_cast<double>(pairs);
}

double unidirectional_pair_fraction(const HopMatrix& m) {
  if (m.n < 2) {
    throw std::invalid_argument("unidirectional_pair_fraction: need >= 2 nodes");
  }
  std::int64_t unidirectional = 0;
  for (NodeId u = 0; u < m.n; ++u) {
    for (NodeId v = u + 1; v < m.n; ++v) {
      const bool fwd = m.reachable(u, v);
      const bool rev = m.reachable(v, u);
      if (fwd != rev) {
        ++unidirectional;
      }
    }
  }
  const std::int64_t pairs = static_cast<std::int64_t>(m.n) * (m.n - 1) / 2;
  return static_cast<double>(unidirectional) / static_cast<double>(pairs);
}

double unidirectional_pair_fraction(const DirectedLinkGraph& graph) {
  return unidirectional_pair_fraction(all_pairs_hop_distances(graph));
}

double clustering_coefficient(const DirectedLinkGraph& graph) {
  const int n = graph.size();
  if (n == 0) {
    return 0.0;
  }
  double sum = 0.0;
  for (NodeId v = 0; v < n; ++v) {
    const auto out = graph.out_neighbors(v);
    const std::size_t d = out.size();
    if (d < 2) {
      continue;
    }
    std::int64_t linked = 0;
    for (NodeId a : out) {
      for (NodeId b : out) {
        if (a != b && graph.has_edge(a, b)) {
          ++linked;
        }
      }
    }
    sum += static_cast<double>(linked) /
           (static_cast<double>(d) * static_cast<double>(d - 1));
  }
  return sum / n;
}

FitResult linear_fit(std::span<const std::pair<double, double>> points) {
  const std::size_t n = points.size();
  if (n < 2) {
    throw std::invalid_argument("linear_fit: need at least 2 points");
  }
  double mean_x = 0.0, mean_y = 0.0;
  for (const auto& [x, y] : points) {
    mean_x += x;
    mean_y += y;
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);

  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& [x, y] : points) {
    const double dx = x - mean_x;
    const double dy = y - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) {
    throw std::invalid_argument("linear_fit: x values are all identical");
  }

  FitResult fit;
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  if (syy == 0.0) {
    fit.slope = 0.0;
    fit.intercept = mean_y;
    fit.r_squared = 0.0;  // zero variance convention
    return fit;
  }
  double ss_res = 0.0;
  for (const auto& [x, y] : points) {
    const double e = y - (fit.slope * x + fit.intercept);
    ss_res += e * e;
  }
  fit.r_squared = 1.0 - ss_res / syy;
  return fit;
}

FitResult log_growth_fit(std::span<const std::pair<double, double>> points) {
  if (points.size() < 3) {
    throw std::invalid_argument("log_growth_fit: need at least 3 points");
  }
  std::vector<std::pair<double, double>> transformed;
  transformed.reserve(points.size());
  for (const auto& [d, apl] : points) {
    if (!(d > 0.0)) {
      throw std::invalid_argument("log_growth_fit: diameters must be positive");
    }
    for (const auto& [other, unused] : transformed) {
      if (other == std::log(d)) {
        throw std::invalid_argument("log_growth_fit: duplicate diameter value");
      }
    }
    transformed.emplace_back(std::log(d), apl);
  }
  return linear_fit(transformed);
}

std::string MetricsReport::csv_header() {
  return "seed,n,width,height,model,p,beta,apl0,apl,c0,c,uni_frac,"
         "unreach_frac,beamformer_frac,d";
}

std::string MetricsReport::csv_row() const {
  std::string row;
  row += std::to_string(seed);
  row += ',' + std::to_string(n);
  row += ',' + format_full(width);
  row += ',' + format_full(height);
  row += ',' + model;
  row += ',' + format_full(p);
  row += ',' + format_full(beta);
  row += ',' + format_full(baseline_apl);
  row += ',' + format_full(apl);
  row += ',' + format_full(baseline_clustering);
  row += ',' + format_full(clustering);
  row += ',' + format_full(unidirectional_pair_frac);
  row += ',' + format_full(unreachable_pair_frac);
  row += ',' + format_full(beamformer_frac);
  row += ',' + format_full(diameter);
  return row;
}

void measure_graph(const DirectedLinkGraph& graph, double& apl_out,
                   double& clustering_out, double& uni_out,
                   double& unreach_out) {
  const HopMatrix m = all_pairs_hop_distances(graph);
  apl_out = average_path_length(m);
  clustering_out = clustering_coefficient(graph);
  uni_out = unidirectional_pair_fraction(m);
  unreach_out = unreachable_pair_fraction(m);
}

}  // namespace swbeam
