#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <vector>

#include "swbeam/antenna.hpp"
#include "swbeam/topology.hpp"

namespace swbeam {

// One source-destination packet flow routed over the omni graph.
struct Flow {
  NodeId source = 0;
  NodeId destination = 0;
  std::vector<NodeId> route;  // source ... destination, minimum-hop
};

// What a node has recorded about one neighbor from overheard packets.
struct NeighborRecord {
  double w = 1.0;
  std::int64_t g = 1;
  Point position;
  int max_hop_seen = -1;          // largest packet hop count delivered by it
  std::int64_t last_seen_slot = -1;
};

// Per-node protocol state. w > 0 and g >= 1 always hold (one virtual
// self-packet at initialization keeps every denominator positive); the
// neighbor table holds only nodes actually overheard.
struct WfbNodeState {
  double w = 1.0;
  std::int64_t g = 1;
  std::map<NodeId, NeighborRecord> neighbor_table;
  bool beamformed = false;
  bool suppressed = false;
};

// ceil(source_fraction * N) distinct sources, each with a uniform random
// destination != source; routes are minimum-hop on the omni graph with
// lexicographically smallest node-id sequence as tie-break. Unroutable
// flows are dropped (reported via WarmupResult on simulation).
std::vector<Flow> generate_traffic(const Topology& topo, double source_fraction,
                                   std::uint64_t seed);

// Bet(v) = g(v) / (g(v) + sum of recorded neighbor g).
double simple_betweenness(const WfbNodeState& v);

// Transmit-time update: increments g, then
//   w_new = g_new / (w_old * [g_old/w_old + sum over recorded neighbors g/w]).
// Recorded neighbors are summed in ascending id order.
void wfb_on_transmit(WfbNodeState& v);

// Overhear-time update at u for a packet from v carrying (w_v, g_v):
//   w_new = g_u / (w_old * [g_v/w_v + g_u/w_old + sum over recorded
//            neighbors except v, ascending id]).
// Afterwards u's record for v is refreshed with the packet values, the
// packet hop count, v's position and the slot.
void wfb_on_overhear(WfbNodeState& u, NodeId v, double w_v, std::int64_t g_v,
                     Point v_position, int hop_count, std::int64_t slot);

struct TransmitEvent {
  std::int64_t slot = 0;
  NodeId transmitter = 0;
  NodeId flow_source = 0;
  NodeId flow_destination = 0;
  int hop_index = 0;  // 1-based hop count carried by the packet
  double w_after = 0.0;
  std::int64_t g_after = 0;
};

struct WarmupResult {
  std::vector<WfbNodeState> states;
  std::vector<TransmitEvent> events;
  std::vector<Flow> dropped_flows;
};

// Slot-driven warm-up on the all-omni topology: one transmission per global
// slot, round-robin over active flows. Every transmission updates the sender
// (wfb_on_transmit) and every omni neighbor (wfb_on_overhear, ascending id).
// A closing announcement round then refreshes every neighbor table with the
// final (w, g) values; announcements carry no payload and change no state.
// Fully deterministic given the flow list.
WarmupResult run_warmup(const Topology& topo, std::span<const Flow> flows);

// Similarity test: |mean recorded neighbor w - w(v)| < beta * w(v).
// False when nothing was ever overheard.
bool beam_decision(const WfbNodeState& v, double beta);

// Bearing toward the recorded neighbor with the largest max_hop_seen; ties
// by most recent last_seen_slot, then lowest id. Falls back to the farthest
// recorded neighbor when no hop counts were recorded. Throws on empty table.
double choose_orientation(const WfbNodeState& v, Point self_position);

struct DecisionRecord {
  int order = 0;           // evaluation position (descending w)
  NodeId node = 0;
  double w = 0.0;
  bool beamformed = false;
  NodeId suppressor = -1;  // -1 when not suppressed
  double orientation = 0.0;
  double theta = 0.0;
};

struct DecisionResult {
  std::vector<AntennaConfig> configs;  // omni except for beamformers
  std::vector<DecisionRecord> log;     // one row per node, evaluation order
  int beamformer_count = 0;
};

// Evaluates nodes in descending-w order (ties by id). A positive decision
// converts the node to Sector(theta*, r(theta*), chosen orientation) with
// theta* from the network mean omni degree, and suppresses every node inside
// its omni disc or new sector footprint.
DecisionResult apply_decisions(const Topology& topo,
                               std::span<const WfbNodeState> states,
                               double beta,
                               std::span<const double> theta_candidates);

void save_event_log(std::span<const TransmitEvent> events,
                    const std::filesystem::path& path);
void save_decision_log(std::span<const DecisionRecord> log,
                       const std::filesystem::path& path);

}  // namespace swbeam
