#include "wsnsense/world.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "wsnsense/errors.hpp"

namespace wsnsense {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kSinkClusterRadius = 10.0;  // m, sink placement disc
}  // namespace

const char* activity_name(Activity activity) {
  switch (activity) {
    case Activity::Sense: return "sense";
    case Activity::Transmit: return "transmit";
    case Activity::Receive: return "receive";
    case Activity::Beacon: return "beacon";
    case Activity::RouteControl: return "route_control";
  }
  return "?";
}

double EnergyLedger::node_total(int node) const {
  double sum = 0.0;
  for (double e : energy_[static_cast<std::size_t>(node)]) sum += e;
  return sum;
}

double EnergyLedger::activity_total(Activity activity) const {
  double sum = 0.0;
  for (const auto& row : energy_) sum += row[index(activity)];
  return sum;
}

std::uint64_t EnergyLedger::activity_count(Activity activity) const {
  std::uint64_t sum = 0;
  for (const auto& row : counts_) sum += row[index(activity)];
  return sum;
}

double EnergyLedger::total() const {
  double sum = 0.0;
  for (const auto& row : energy_)
    for (double e : row) sum += e;
  return sum;
}

SimWorld::SimWorld(const WsnConfig& config, const ArenaSpec& arena,
                   const CostModel& cost, std::vector<Vec2> node_positions,
                   std::vector<Vec2> sink_positions, std::uint64_t seed)
    : config_(config),
      arena_(arena),
      cost_(cost),
      ledger_(node_positions.size()),
      stimulus_rng_(split_seed(seed, seed_tag::kStimuli)) {
  validate(arena_);
  validate(cost_);
  if (node_positions.empty())
    throw ConfigError("world has no nodes");
  if (sink_positions.empty())
    throw ConfigError("world has no sinks");

  sinks_ = std::move(sink_positions);
  const auto n = node_positions.size();
  nodes_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto& node = nodes_[i];
    node.id = static_cast<int>(i);
    node.position = node_positions[i];
    node.battery = arena_.initial_battery;
    node.alive = true;
  }

  // Neighbor tables: nearest nodes within transmission radius, ties by id,
  // truncated to the table capacity.
  const double tr_sq =
      config_.transmission_radius * config_.transmission_radius;
  std::vector<std::pair<double, int>> candidates;
  for (auto& node : nodes_) {
    candidates.clear();
    for (const auto& other : nodes_) {
      if (other.id == node.id) continue;
      const double d = dist_sq(node.position, other.position);
      if (d <= tr_sq) candidates.emplace_back(d, other.id);
    }
    std::sort(candidates.begin(), candidates.end());
    const auto cap = static_cast<std::size_t>(config_.num_neighbors);
    if (candidates.size() > cap) candidates.resize(cap);
    node.neighbors.reserve(candidates.size());
    for (const auto& [d, id] : candidates) node.neighbors.push_back(id);
  }

  visited_mark_.assign(n, 0);
}

SimWorld build_world(const WsnConfig& config, const ArenaSpec& arena,
                     const CostModel& cost, std::uint64_t seed) {
  validate(config, arena);

  const auto n = static_cast<std::size_t>(node_count(config, arena));
  Rng place_rng(split_seed(seed, seed_tag::kPlacement));
  std::vector<Vec2> positions(n);
  for (auto& p : positions) {
    p.x = place_rng.uniform_real(0.0, arena.width);
    p.y = place_rng.uniform_real(0.0, arena.height);
  }

  // Sinks cluster inside a small disc at the arena center.
  Rng sink_rng(split_seed(seed, seed_tag::kSinks));
  const Vec2 center{arena.width / 2.0, arena.height / 2.0};
  std::vector<Vec2> sinks(static_cast<std::size_t>(config.num_sinks));
  for (auto& s : sinks) {
    const double r = kSinkClusterRadius * std::sqrt(sink_rng.uniform01());
    const double theta = 2.0 * kPi * sink_rng.uniform01();
    s.x = std::clamp(center.x + r * std::cos(theta), 0.0, arena.width);
    s.y = std::clamp(center.y + r * std::sin(theta), 0.0, arena.height);
  }

  return SimWorld(config, arena, cost, std::move(positions), std::move(sinks),
                  seed);
}

int SimWorld::nearest_sink_to(const Vec2& point) const {
  int best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < sinks_.size(); ++k) {
    const double d = dist_sq(point, sinks_[k]);
    if (d < best_d) {
      best_d = d;
      best = static_cast<int>(k);
    }
  }
  return best;
}

RouteStep route_next_hop(const SimWorld& world, int current,
                         const Packet& packet) {
  const auto& config = world.config_;
  if (packet.hops_used >= config.num_hops)
    return {RouteStep::Kind::Failure, -1};

  const auto& node = world.nodes_[static_cast<std::size_t>(current)];
  const double tr_sq =
      config.transmission_radius * config.transmission_radius;

  // Any sink in radio range: deliver to the nearest one (lowest id on tie).
  int sink = -1;
  double sink_d = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < world.sinks_.size(); ++k) {
    const double d = dist_sq(node.position, world.sinks_[k]);
    if (d <= tr_sq && d < sink_d) {
      sink_d = d;
      sink = static_cast<int>(k);
    }
  }
  if (sink >= 0) return {RouteStep::Kind::ToSink, sink};

  // Greedy advance toward the packet's target sink.
  const Vec2 target = world.sinks_[static_cast<std::size_t>(packet.target_sink)];
  const double here = dist_sq(node.position, target);
  int best = -1;
  double best_d = here;
  for (int id : node.neighbors) {
    const auto& neighbor = world.nodes_[static_cast<std::size_t>(id)];
    if (!neighbor.alive) continue;
    const double d = dist_sq(neighbor.position, target);
    if (d < best_d || (d == best_d && best >= 0 && id < best)) {
      best_d = d;
      best = id;
    }
  }
  if (best >= 0) return {RouteStep::Kind::ToNode, best};
  return {RouteStep::Kind::Failure, -1};
}

void SimWorld::charge(NodeState& node, Activity activity, double amount) {
  if (!node.alive) return;
  const double drawn = std::min(amount, node.battery);
  node.battery -= drawn;
  ledger_.add(node.id, activity, drawn);
  if (node.battery <= 0.0) {
    node.battery = 0.0;
    node.alive = false;
    ++nodes_died_;
    // Queued packets die with the node.
    node.outbox.clear();
    node.inbox.clear();
  }
}

void SimWorld::inject_packet(int node, const Packet& packet) {
  auto& state = nodes_[static_cast<std::size_t>(node)];
  if (!state.alive) return;
  state.outbox.push_back(packet);
  ++packets_generated_;
}

void SimWorld::step() {
  ++tick_;
  phase_spawn_stimuli();
  phase_sense();
  phase_transmit();
  phase_beacon();
  phase_route_control();
}

void SimWorld::phase_spawn_stimuli() {
  stimuli_.clear();
  if (arena_.stimulus_rate <= 0.0) return;
  const long count = stimulus_rng_.poisson(arena_.stimulus_rate);
  stimuli_.reserve(static_cast<std::size_t>(count));
  for (long k = 0; k < count; ++k) {
    Stimulus s;
    s.position.x = stimulus_rng_.uniform_real(0.0, arena_.width);
    s.position.y = stimulus_rng_.uniform_real(0.0, arena_.height);
    s.birth_tick = tick_;
    stimuli_.push_back(s);
  }
}

void SimWorld::phase_sense() {
  if (tick_ % config_.sensor_interval != 0) return;
  const double radius_sq = config_.sense_radius * config_.sense_radius;
  const double scan_cost =
      cost_.e_sense_base +
      cost_.e_sense_area * kPi * config_.sense_radius * config_.sense_radius;
  for (auto& node : nodes_) {
    if (!node.alive) continue;
    charge(node, Activity::Sense, scan_cost);
    if (!node.alive) continue;
    for (const auto& stimulus : stimuli_) {
      if (dist_sq(node.position, stimulus.position) > radius_sq) continue;
      Packet packet;
      packet.origin = node.id;
      packet.created_tick = tick_;
      packet.hops_used = 0;
      packet.target_sink = nearest_sink_to(node.position);
      node.outbox.push_back(packet);
      ++packets_generated_;
    }
  }
}

void SimWorld::phase_transmit() {
  if (tick_ % config_.transmission_interval != 0) return;
  std::vector<Packet> pending;
  for (auto& node : nodes_) {
    if (!node.alive || node.outbox.empty()) continue;
    pending = std::move(node.outbox);
    node.outbox.clear();
    for (auto& packet : pending) {
      const RouteStep hop = route_next_hop(*this, node.id, packet);
      if (hop.kind == RouteStep::Kind::Failure) continue;  // dropped

      if (hop.kind == RouteStep::Kind::ToSink) {
        const double d_sq =
            dist_sq(node.position, sinks_[static_cast<std::size_t>(hop.id)]);
        charge(node, Activity::Transmit,
               (cost_.e_elec + cost_.e_amp * d_sq) * cost_.packet_bits);
        packet.hops_used += 1;
        ++packets_delivered_;
        max_delivered_hops_ = std::max(max_delivered_hops_, packet.hops_used);
      } else {
        auto& receiver = nodes_[static_cast<std::size_t>(hop.id)];
        const double d_sq = dist_sq(node.position, receiver.position);
        charge(node, Activity::Transmit,
               (cost_.e_elec + cost_.e_amp * d_sq) * cost_.packet_bits);
        packet.hops_used += 1;
        receiver.inbox.push_back(packet);
        // The receive charge may kill the receiver, losing the packet.
        charge(receiver, Activity::Receive,
               cost_.e_elec * cost_.packet_bits);
      }
      if (!node.alive) break;  // sender died paying; rest of queue is lost
    }
  }
  // Received packets become sendable at the next opportunity.
  for (auto& node : nodes_) {
    if (node.inbox.empty()) continue;
    node.outbox.insert(node.outbox.end(), node.inbox.begin(),
                       node.inbox.end());
    node.inbox.clear();
  }
}

void SimWorld::phase_beacon() {
  if (tick_ % cost_.beacon_period != 0) return;
  const double listen_cost = cost_.e_elec * cost_.ctl_bits;
  for (auto& node : nodes_) {
    if (!node.alive) continue;
    charge(node, Activity::Beacon, cost_.e_beacon);
    for (int id : node.neighbors) {
      auto& listener = nodes_[static_cast<std::size_t>(id)];
      if (!listener.alive) continue;
      charge(listener, Activity::Receive, listen_cost);
    }
  }
}

void SimWorld::phase_route_control() {
  if (tick_ % cost_.beacon_period != 0) return;
  for (const auto& node : nodes_) {
    if (!node.alive) continue;
    flood_route_control(node.id);
  }
}

void SimWorld::flood_route_control(int origin) {
  if (++visit_generation_ == 0) {
    std::fill(visited_mark_.begin(), visited_mark_.end(), 0u);
    visit_generation_ = 1;
  }
  frontier_.clear();
  visited_mark_[static_cast<std::size_t>(origin)] = visit_generation_;
  frontier_.push_back(origin);

  // A node at BFS depth d retransmits iff d < num_hops, so no cascade path
  // exceeds the hop budget. Each forwarding retransmission costs
  // e_route_ctl; reception is free.
  for (std::int64_t depth = 0;
       depth < config_.num_hops && !frontier_.empty(); ++depth) {
    next_frontier_.clear();
    for (int u : frontier_) {
      auto& node = nodes_[static_cast<std::size_t>(u)];
      if (!node.alive) continue;
      charge(node, Activity::RouteControl, cost_.e_route_ctl);
      for (int v : node.neighbors) {
        if (visited_mark_[static_cast<std::size_t>(v)] == visit_generation_)
          continue;
        if (!nodes_[static_cast<std::size_t>(v)].alive) continue;
        visited_mark_[static_cast<std::size_t>(v)] = visit_generation_;
        next_frontier_.push_back(v);
      }
    }
    std::swap(frontier_, next_frontier_);
  }
}

RunRecord run(const WsnConfig& config, const ArenaSpec& arena,
              const CostModel& cost, std::uint64_t seed) {
  SimWorld world = build_world(config, arena, cost, seed);
  for (std::int64_t t = 0; t < arena.duration; ++t) world.step();

  RunRecord record;
  record.config = config;
  record.seed = seed;
  record.total_energy = world.ledger().total();
  record.packets_generated = world.packets_generated();
  record.packets_delivered = world.packets_delivered();
  record.nodes_died = world.nodes_died();
  record.duration = arena.duration;
  return record;
}

}  // namespace wsnsense
