// Independent reference implementations used by unit and acceptance tests.
// Everything here is deliberately written against the plainest possible data
// structures (dense matrices, std::map) so it shares no code path with the
// library implementations it checks.
#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "swbeam/linkgraph.hpp"
#include "swbeam/metrics.hpp"
#include "swbeam/topology.hpp"
#include "swbeam/wfb.hpp"

namespace swbeam::oracles {

// Dense adjacency view of a directed graph.
inline std::vector<std::vector<bool>> dense_adjacency(const DirectedLinkGraph& g) {
  const int n = g.size();
  std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
  for (NodeId v = 0; v < n; ++v) {
    for (NodeId u : g.out_neighbors(v)) {
      a[v][u] = true;
    }
  }
  return a;
}

// Floyd-Warshall with unit weights; -1 marks unreachable.
inline std::vector<std::vector<std::int32_t>> floyd_warshall(
    const std::vector<std::vector<bool>>& adj) {
  const int n = static_cast<int>(adj.size());
  constexpr std::int32_t kInf = 1 << 29;
  std::vector<std::vector<std::int32_t>> d(n, std::vector<std::int32_t>(n, kInf));
  for (int i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (int j = 0; j < n; ++j) {
      if (adj[i][j]) {
        d[i][j] = 1;
      }
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (d[i][k] + d[k][j] < d[i][j]) {
          d[i][j] = d[i][k] + d[k][j];
        }
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (d[i][j] >= kInf) {
        d[i][j] = -1;
      }
    }
  }
  return d;
}

// Direct-definition APL: mean hops over ordered reachable pairs.
inline double brute_apl(const std::vector<std::vector<std::int32_t>>& d) {
  const int n = static_cast<int>(d.size());
  std::int64_t total = 0, count = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && d[i][j] >= 0) {
        total += d[i][j];
        ++count;
      }
    }
  }
  return static_cast<double>(total) / static_cast<double>(count);
}

// Direct-definition out-neighborhood transitivity.
inline double brute_clustering(const std::vector<std::vector<bool>>& adj) {
  const int n = static_cast<int>(adj.size());
  double sum = 0.0;
  for (int v = 0; v < n; ++v) {
    std::vector<int> out;
    for (int u = 0; u < n; ++u) {
      if (adj[v][u]) {
        out.push_back(u);
      }
    }
    const std::size_t deg = out.size();
    if (deg < 2) {
      continue;
    }
    std::int64_t linked = 0;
    for (int a : out) {
      for (int b : out) {
        if (a != b && adj[a][b]) {
          ++linked;
        }
      }
    }
    sum += static_cast<double>(linked) /
           (static_cast<double>(deg) * static_cast<double>(deg - 1));
  }
  return sum / n;
}

// Direct-definition unidirectional pair fraction (path-level).
inline double brute_unidirectional(const std::vector<std::vector<std::int32_t>>& d) {
  const int n = static_cast<int>(d.size());
  std::int64_t count = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if ((d[i][j] >= 0) != (d[j][i] >= 0)) {
        ++count;
      }
    }
  }
  return static_cast<double>(count) /
         (static_cast<double>(n) * (n - 1) / 2.0);
}

// Step-by-step re-execution of the WFB update recursion over a logged event
// sequence. Neighborhoods are re-derived from the topology by brute distance
// scan; sums follow ascending node id with the self term first (transmit)
// and the packet term first (overhear).
struct ReplayNode {
  double w = 1.0;
  std::int64_t g = 1;
  std::map<NodeId, std::pair<double, std::int64_t>> heard;  // id -> (w, g)
};

inline std::vector<ReplayNode> replay_events(const Topology& topo,
                                             std::span<const TransmitEvent> events) {
  const int n = topo.size();
  std::vector<ReplayNode> nodes(n);
  for (const TransmitEvent& ev : events) {
    ReplayNode& v = nodes[ev.transmitter];
    double sum = static_cast<double>(v.g) / v.w;
    for (const auto& [id, wg] : v.heard) {
      sum += static_cast<double>(wg.second) / wg.first;
    }
    const double w_prev = v.w;
    v.g += 1;
    v.w = static_cast<double>(v.g) / (w_prev * sum);

    for (NodeId u = 0; u < n; ++u) {
      if (u == ev.transmitter ||
          !within_range(topo.positions[u], topo.positions[ev.transmitter],
                        topo.omni_range)) {
        continue;
      }
      ReplayNode& ru = nodes[u];
      const double u_prev = ru.w;
      double bracket = static_cast<double>(v.g) / v.w;
      bracket += static_cast<double>(ru.g) / u_prev;
      for (const auto& [id, wg] : ru.heard) {
        if (id != ev.transmitter) {
          bracket += static_cast<double>(wg.second) / wg.first;
        }
      }
      ru.w = static_cast<double>(ru.g) / (u_prev * bracket);
      ru.heard[ev.transmitter] = {v.w, v.g};
    }
  }
  return nodes;
}

// Exhaustive argmax of the weighted beam length with the smaller-theta tie
// rule, for checking optimal_beamwidth.
inline double brute_best_beamwidth(std::span<const double> candidates, double r,
                                   double n) {
  double best_theta = 0.0;
  double best_value = -1.0;
  for (double theta : candidates) {
    const double len = r * std::sqrt(2.0 * kPi / theta);
    const double disc = kPi * r * r;
    const double a_f = 0.5 * theta * r * r;
    const double inner = len > r ? len - r : 0.0;
    double a_l = 0.5 * theta * (len * len - inner * inner);
    if (a_l > disc) {
      a_l = disc;
    }
    const double value = len * (1.0 - std::pow(1.0 - a_f / disc, n)) *
                         (1.0 - std::pow(1.0 - a_l / disc, n));
    if (value > best_value || (value == best_value && theta < best_theta)) {
      best_value = value;
      best_theta = theta;
    }
  }
  return best_theta;
}

// Verifies the suppression invariant on a decision log: no beamformer may
// lie inside the omni disc or sector footprint of an earlier beamformer.
inline bool suppression_sound(const Topology& topo,
                              std::span<const DecisionRecord> log) {
  std::vector<const DecisionRecord*> beams;
  for (const DecisionRecord& rec : log) {
    if (!rec.beamformed) {
      continue;
    }
    const Point p = topo.positions[rec.node];
    for (const DecisionRecord* earlier : beams) {
      const Point q = topo.positions[earlier->node];
      if (within_range(q, p, topo.omni_range) ||
          sector_covers(q, earlier->orientation, earlier->theta,
                        sector_beam_length(earlier->theta, topo.omni_range), p)) {
        return false;
      }
    }
    beams.push_back(&rec);
  }
  return true;
}

}  // namespace swbeam::oracles
