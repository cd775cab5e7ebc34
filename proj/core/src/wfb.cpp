#include "swbeam/wfb.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "swbeam/csv.hpp"
#include "swbeam/rng.hpp"

namespace swbeam {

std::vector<Flow> generate_traffic(const Topology& topo, double source_fraction,
                                   std::uint64_t seed) {
  if (!(source_fraction > 0.0) || source_fraction > 1.0) {
    throw std::invalid_argument("generate_traffic: source fraction must be in (0, 1]");
  }
  const int n = topo.size();
  const int n_sources = static_cast<int>(
      std::ceil(source_fraction * static_cast<double>(n) - 1e-9));

  Rng rng(seed);

  // Distinct sources via partial Fisher-Yates.
  std::vector<NodeId> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  for (int i = 0; i < n_sources; ++i) {
    const std::size_t j = i + rng.next_index(static_cast<std::size_t>(n - i));
    std::swap(ids[i], ids[j]);
  }

  const auto adj = omni_adjacency(topo);

  std::vector<Flow> flows;
  flows.reserve(n_sources);
  std::vector<std::int32_t> dist_to_dst(n);
  std::vector<NodeId> queue;
  queue.reserve(n);

  for (int i = 0; i < n_sources; ++i) {
    Flow flow;
    flow.source = ids[i];
    std::size_t pick = rng.next_index(static_cast<std::size_t>(n - 1));
    if (static_cast<NodeId>(pick) >= flow.source) {
      ++pick;
    }
    flow.destination = static_cast<NodeId>(pick);

    // Hop distances toward the destination.
    std::fill(dist_to_dst.begin(), dist_to_dst.end(), -1);
    dist_to_dst[flow.destination] = 0;
    queue.clear();
    queue.push_back(flow.destination);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const NodeId v = queue[head];
      for (NodeId u : adj[v]) {
        if (dist_to_dst[u] < 0) {
          dist_to_dst[u] = dist_to_dst[v] + 1;
          queue.push_back(u);
        }
      }
    }
    if (dist_to_dst[flow.source] < 0) {
      continue;  // unreachable destination; flow dropped
    }

    // Greedy smallest-id descent gives the lexicographically smallest
    // minimum-hop route.
    NodeId cur = flow.source;
    flow.route.push_back(cur);
    while (cur != flow.destination) {
      const std::int32_t want = dist_to_dst[cur] - 1;
      NodeId next = -1;
      for (NodeId u : adj[cur]) {
        if (dist_to_dst[u] == want) {
          next = u;
          break;  // adjacency is ascending
        }
      }
      cur = next;
      flow.route.push_back(cur);
    }
    flows.push_back(std::move(flow));
  }
  return flows;
}

double simple_betweenness(const WfbNodeState& v) {
  double denom = static_cast<double>(v.g);
  for (const auto& [id, rec] : v.neighbor_table) {
    denom += static_cast<double>(rec.g);
  }
  return static_cast<double>(v.g) / denom;
}

void wfb_on_transmit(WfbNodeState& v) {
  const double w_prev = v.w;
  double sum = static_cast<double>(v.g) / w_prev;
  for (const auto& [id, rec] : v.neighbor_table) {
    sum += static_cast<double>(rec.g) / rec.w;
  }
  v.g += 1;
  v.w = static_cast<double>(v.g) / (w_prev * sum);
}

void wfb_on_overhear(WfbNodeState& u, NodeId v, double w_v, std::int64_t g_v,
                     Point v_position, int hop_count, std::int64_t slot) {
  const double w_prev = u.w;
  double bracket = static_cast<double>(g_v) / w_v;
  bracket += static_cast<double>(u.g) / w_prev;
  for (const auto& [id, rec] : u.neighbor_table) {
    if (id != v) {
      bracket += static_cast<double>(rec.g) / rec.w;
    }
  }
  u.w = static_cast<double>(u.g) / (w_prev * bracket);

  NeighborRecord& rec = u.neighbor_table[v];
  rec.w = w_v;
  rec.g = g_v;
  rec.position = v_position;
  rec.max_hop_seen = std::max(rec.max_hop_seen, hop_count);
  rec.last_seen_slot = slot;
}

WarmupResult run_warmup(const Topology& topo, std::span<const Flow> flows) {
  const int n = topo.size();
  WarmupResult result;
  result.states.assign(n, WfbNodeState{});

  const auto adj = omni_adjacency(topo);

  std::vector<std::size_t> next_hop(flows.size(), 0);
  std::vector<char> active(flows.size(), 0);
  std::size_t active_count = 0;
  for (std::size_t i = 0; i < flows.size(); ++i) {
    if (flows[i].route.size() >= 2) {
      active[i] = 1;
      ++active_count;
    } else {
      result.dropped_flows.push_back(flows[i]);
    }
  }

  std::int64_t slot = 0;
  while (active_count > 0) {
    for (std::size_t i = 0; i < flows.size(); ++i) {
      if (!active[i]) {
        continue;
      }
      const Flow& flow = flows[i];
      const std::size_t h = next_hop[i];
      const NodeId v = flow.route[h];
      const int hop_count = static_cast<int>(h) + 1;
      ++slot;

      WfbNodeState& sv = result.states[v];
      wfb_on_transmit(sv);
      for (NodeId u : adj[v]) {
        wfb_on_overhear(result.states[u], v, sv.w, sv.g, topo.positions[v],
                        hop_count, slot);
      }

      result.events.push_back({slot, v, flow.source, flow.destination,
                               hop_count, sv.w, sv.g});

      next_hop[i] = h + 1;
      if (next_hop[i] + 1 >= flow.route.size()) {
        active[i] = 0;
        --active_count;
      }
    }
  }

  // Closing announcement round: every node broadcasts its final WFB once so
  // decision-time neighbor tables hold current values. Announcements are
  // control beacons, not forwarded packets: w and g stay untouched and no
  // hop counts are recorded.
  for (NodeId v = 0; v < n; ++v) {
    ++slot;
    const WfbNodeState& sv = result.states[v];
    for (NodeId u : adj[v]) {
      NeighborRecord& rec = result.states[u].neighbor_table[v];
      rec.w = sv.w;
      rec.g = sv.g;
      rec.position = topo.positions[v];
      rec.last_seen_slot = slot;
    }
  }
  return result;
}

bool beam_decision(const WfbNodeState& v, double beta) {
  if (v.neighbor_table.empty()) {
    return false;
  }
  double sum = 0.0;
  for (const auto& [id, rec] : v.neighbor_table) {
    sum += rec.w;
  }
  const double avg = sum / static_cast<double>(v.neighbor_table.size());
  return std::abs(avg - v.w) < beta * v.w;
}

double choose_orientation(const WfbNodeState& v, Point self_position) {
  if (v.neighbor_table.empty()) {
    throw std::runtime_error("choose_orientation: no recorded neighbors");
  }
  const NeighborRecord* best = nullptr;
  for (const auto& [id, rec] : v.neighbor_table) {
    if (best == nullptr || rec.max_hop_seen > best->max_hop_seen ||
        (rec.max_hop_seen == best->max_hop_seen &&
         rec.last_seen_slot > best->last_seen_slot)) {
      best = &rec;
    }
  }
  if (best->max_hop_seen < 0) {
    // No hop records at all: aim at the farthest recorded neighbor.
    double best_sq = -1.0;
    for (const auto& [id, rec] : v.neighbor_table) {
      const double sq = squared_distance(self_position, rec.position);
      if (sq > best_sq) {
        best_sq = sq;
        best = &rec;
      }
    }
  }
  return bearing(self_position, best->position);
}

DecisionResult apply_decisions(const Topology& topo,
                               std::span<const WfbNodeState> states,
                               double beta,
                               std::span<const double> theta_candidates) {
  const int n = topo.size();
  if (static_cast<int>(states.size()) != n) {
    throw std::invalid_argument("apply_decisions: state count mismatch");
  }
  const double r = topo.omni_range;

  // One beam shape for the whole network, from the mean omni degree.
  const double theta = optimal_beamwidth(theta_candidates, r, mean_omni_degree(topo));
  const double length = sector_beam_length(theta, r);

  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    if (states[a].w != states[b].w) {
      return states[a].w > states[b].w;
    }
    return a < b;
  });

  DecisionResult result;
  result.configs.assign(n, OmniAntenna{r});
  result.log.reserve(n);

  std::vector<char> suppressed(n, 0);
  std::vector<char> beamformed(n, 0);
  std::vector<NodeId> suppressor(n, -1);

  for (int rank = 0; rank < n; ++rank) {
    const NodeId v = order[rank];
    DecisionRecord rec;
    rec.order = rank;
    rec.node = v;
    rec.w = states[v].w;
    rec.suppressor = suppressor[v];

    if (!suppressed[v] && beam_decision(states[v], beta)) {
      const double orientation =
          normalize_angle(choose_orientation(states[v], topo.positions[v]));

      result.configs[v] = SectorAntenna{theta, length, orientation};
      beamformed[v] = 1;
      ++result.beamformer_count;
      rec.beamformed = true;
      rec.orientation = orientation;
      rec.theta = theta;

      // Announce over both the omni disc and the new beam footprint.
      for (NodeId u = 0; u < n; ++u) {
        if (u == v || beamformed[u]) {
          continue;
        }
        const bool covered =
            within_range(topo.positions[v], topo.positions[u], r) ||
            sector_covers(topo.positions[v], orientation, theta, length,
                          topo.positions[u]);
        if (covered && !suppressed[u]) {
          suppressed[u] = 1;
          suppressor[u] = v;
        }
      }
    }
    result.log.push_back(rec);
  }
  return result;
}

void save_event_log(std::span<const TransmitEvent> events,
                    const std::filesystem::path& path) {
  std::string csv = "slot,transmitter,flow_src,flow_dst,hop_index,w_after,g_after\n";
  for (const TransmitEvent& e : events) {
    csv += std::to_string(e.slot);
    csv += ',' + std::to_string(e.transmitter);
    csv += ',' + std::to_string(e.flow_source);
    csv += ',' + std::to_string(e.flow_destination);
    csv += ',' + std::to_string(e.hop_index);
    csv += ',' + format_full(e.w_after);
    csv += ',' + std::to_string(e.g_after);
    csv += '\n';
  }
  write_text_file(path, csv);
}

void save_decision_log(std::span<const DecisionRecord> log,
                       const std::filesystem::path& path) {
  std::string csv = "order,node,w,decision,suppressor,orientation_rad,theta_rad\n";
  for (const DecisionRecord& d : log) {
    csv += std::to_string(d.order);
    csv += ',' + std::to_string(d.node);
    csv += ',' + format_full(d.w);
    csv += ',' + std::string(d.beamformed ? "1" : "0");
    csv += ',';
    if (d.suppressor >= 0) {
      csv += std::to_string(d.suppressor);
    }
    csv += ',' + format_full(d.orientation);
    csv += ',' + format_full(d.theta);
    csv += '\n';
  }
  write_text_file(path, csv);
}

}  // namespace swbeam
