// Discrete-event simulator of a wireless sensor network. Nodes detect
// random stimuli, buffer packets, and forward them greedily toward the
// nearest sink cluster; every unit of consumed energy is booked to a
// per-node, per-activity ledger.
#ifndef WSNSENSE_WORLD_HPP
#define WSNSENSE_WORLD_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "wsnsense/config.hpp"
#include "wsnsense/geometry.hpp"
#include "wsnsense/record.hpp"
#include "wsnsense/rng.hpp"

namespace wsnsense {

enum class Activity : int {
  Sense = 0,
  Transmit = 1,
  Receive = 2,
  Beacon = 3,
  RouteControl = 4,
};
inline constexpr int kActivityCount = 5;
const char* activity_name(Activity activity);

struct Stimulus {
  Vec2 position;
  std::int64_t birth_tick = 0;
};

struct Packet {
  int origin = 0;
  std::int64_t created_tick = 0;
  std::int64_t hops_used = 0;
  int target_sink = 0;
};

struct NodeState {
  int id = 0;
  Vec2 position;
  double battery = 0.0;
  bool alive = true;
  std::vector<int> neighbors;  // nearest first, capped at num_neighbors
  std::vector<Packet> outbox;
  std::vector<Packet> inbox;  // staging area during a transmit phase
};

// Per-node, per-activity energy accounting. Entries only grow; the ledger
// total is the run's overall energy consumption E. Event counts ride along
// for diagnostics and monotonicity checks.
class EnergyLedger {
 public:
  EnergyLedger() = default;
  explicit EnergyLedger(std::size_t nodes)
      : energy_(nodes, zero_energy()), counts_(nodes, zero_counts()) {}

  void add(int node, Activity activity, double amount) {
    energy_[static_cast<std::size_t>(node)][index(activity)] += amount;
    counts_[static_cast<std::size_t>(node)][index(activity)] += 1;
  }

  double entry(int node, Activity activity) const {
    return energy_[static_cast<std::size_t>(node)][index(activity)];
  }
  std::uint64_t count(int node, Activity activity) const {
    return counts_[static_cast<std::size_t>(node)][index(activity)];
  }

  double node_total(int node) const;
  double activity_total(Activity activity) const;
  std::uint64_t activity_count(Activity activity) const;
  double total() const;
  std::size_t nodes() const { return energy_.size(); }

 private:
  static std::size_t index(Activity a) { return static_cast<std::size_t>(a); }
  static std::array<double, kActivityCount> zero_energy() { return {}; }
  static std::array<std::uint64_t, kActivityCount> zero_counts() { return {}; }

  std::vector<std::array<double, kActivityCount>> energy_;
  std::vector<std::array<std::uint64_t, kActivityCount>> counts_;
};

// Next-hop decision for one packet held at one node.
struct RouteStep {
  enum class Kind { ToNode, ToSink, Failure };
  Kind kind = Kind::Failure;
  int id = -1;  // node id or sink id; -1 on failure
};

class SimWorld {
 public:
  // Deterministic world from an explicit layout. build_world() samples the
  // layout; tests construct chains and other fixtures directly.
  SimWorld(const WsnConfig& config, const ArenaSpec& arena,
           const CostModel& cost, std::vector<Vec2> node_positions,
           std::vector<Vec2> sink_positions, std::uint64_t seed);

  // Advances one tick: stimuli, sensing, packet forwarding, beacons,
  // route-maintenance cascades. Dead nodes are silently skipped.
  void step();

  const WsnConfig& config() const { return config_; }
  const ArenaSpec& arena() const { return arena_; }
  const CostModel& cost() const { return cost_; }
  const std::vector<NodeState>& nodes() const { return nodes_; }
  const std::vector<Vec2>& sinks() const { return sinks_; }
  const EnergyLedger& ledger() const { return ledger_; }
  const std::vector<Stimulus>& current_stimuli() const { return stimuli_; }

  std::int64_t tick() const { return tick_; }
  std::int64_t packets_generated() const { return packets_generated_; }
  std::int64_t packets_delivered() const { return packets_delivered_; }
  std::int64_t nodes_died() const { return nodes_died_; }
  std::int64_t max_delivered_hops() const { return max_delivered_hops_; }

  // Queues a packet at a node (counts as generated); test instrumentation.
  void inject_packet(int node, const Packet& packet);

  int nearest_sink_to(const Vec2& point) const;

  friend RouteStep route_next_hop(const SimWorld& world, int current,
                                  const Packet& packet);

 private:
  void phase_spawn_stimuli();
  void phase_sense();
  void phase_transmit();
  void phase_beacon();
  void phase_route_control();
  void flood_route_control(int origin);

  // Draws min(amount, battery) from the node's battery and books it; the
  // node dies when the battery reaches zero and loses any queued packets.
  void charge(NodeState& node, Activity activity, double amount);

  WsnConfig config_;
  ArenaSpec arena_;
  CostModel cost_;
  std::vector<NodeState> nodes_;
  std::vector<Vec2> sinks_;
  EnergyLedger ledger_;
  Rng stimulus_rng_;
  std::vector<Stimulus> stimuli_;

  std::int64_t tick_ = 0;
  std::int64_t packets_generated_ = 0;
  std::int64_t packets_delivered_ = 0;
  std::int64_t nodes_died_ = 0;
  std::int64_t max_delivered_hops_ = 0;

  // Flood scratch, reused across cascades to avoid per-flood allocation.
  std::vector<std::uint32_t> visited_mark_;
  std::uint32_t visit_generation_ = 0;
  std::vector<int> frontier_;
  std::vector<int> next_frontier_;
};

// Samples node and sink placement from the seed and wires neighbor tables.
// Throws ConfigError when the configuration yields an empty network.
SimWorld build_world(const WsnConfig& config, const ArenaSpec& arena,
                     const CostModel& cost, std::uint64_t seed);

// Greedy geographic forwarding: a sink within transmission radius wins,
// otherwise the neighbor strictly closest to the packet's target sink.
// Failure (routing void or exhausted hop budget) is a normal outcome.
RouteStep route_next_hop(const SimWorld& world, int current,
                         const Packet& packet);

// Builds the world, advances it arena.duration ticks and captures the
// result. Deterministic in all inputs.
RunRecord run(const WsnConfig& config, const ArenaSpec& arena,
              const CostModel& cost, std::uint64_t seed);

}  // namespace wsnsense

#endif
