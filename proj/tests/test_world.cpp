#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "wsnsense/errors.hpp"
#include "wsnsense/world.hpp"

using namespace wsnsense;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// A straight chain of `k` nodes spaced 0.9*transmission_radius apart with a
// single sink one more spacing beyond the last node.
SimWorld make_chain(int k, std::int64_t num_hops) {
  WsnConfig config;
  config.transmission_radius = 10.0;
  config.num_hops = num_hops;
  config.num_neighbors = 3;
  config.sense_radius = 1.0;
  config.sensor_interval = 1000;
  config.transmission_interval = 1;
  config.network_density = 0.001;  // unused by the explicit layout
  config.num_sinks = 1;

  ArenaSpec arena;
  arena.width = 9.0 * (k + 2);
  arena.height = 3.0;
  arena.stimulus_rate = 0.0;
  arena.duration = 100;

  std::vector<Vec2> nodes;
  for (int i = 0; i < k; ++i)
    nodes.push_back({9.0 * static_cast<double>(i), 1.5});
  std::vector<Vec2> sinks = {{9.0 * static_cast<double>(k), 1.5}};
  return SimWorld(config, arena, CostModel{}, nodes, sinks, 1);
}

// Walks a packet from node 0 with route_next_hop until delivery or failure;
// returns hops used, or -1 on failure.
int walk_to_sink(SimWorld& world) {
  Packet packet;
  packet.origin = 0;
  packet.target_sink = world.nearest_sink_to(world.nodes()[0].position);
  int current = 0;
  for (;;) {
    const RouteStep hop = route_next_hop(world, current, packet);
    if (hop.kind == RouteStep::Kind::Failure) return -1;
    packet.hops_used += 1;
    if (hop.kind == RouteStep::Kind::ToSink)
      return static_cast<int>(packet.hops_used);
    current = hop.id;
  }
}

}  // namespace

TEST_CASE("node count follows floor(density * area)") {
  WsnConfig config;
  ArenaSpec arena;
  config.network_density = 0.0004;
  arena.width = 500.0;
  arena.height = 500.0;
  CHECK(node_count(config, arena) == 100);

  config.network_density = 0.0012;  // true product is exactly 300
  CHECK(node_count(config, arena) == 300);

  config.network_density = 0.0000041;
  CHECK(node_count(config, arena) == 1);  // floor(1.025)
}

TEST_CASE("empty network is a configuration error") {
  WsnConfig config;
  config.network_density = 1e-9;
  ArenaSpec arena;
  CHECK_THROWS_AS(build_world(config, arena, CostModel{}, 1), ConfigError);
  CHECK_THROWS_AS(run(config, arena, CostModel{}, 1), ConfigError);
}

TEST_CASE("radii beyond the arena diagonal are rejected") {
  WsnConfig config;
  ArenaSpec arena;
  config.sense_radius = 800.0;
  CHECK_THROWS_AS(validate(config, arena), ConfigError);
  config.sense_radius = 25.0;
  config.transmission_radius = 3000.0;
  CHECK_THROWS_AS(validate(config, arena), ConfigError);
}

TEST_CASE("build_world is deterministic and well-formed") {
  WsnConfig config;
  config.network_density = 0.0004;
  config.num_sinks = 4;
  config.num_neighbors = 5;
  ArenaSpec arena;

  const SimWorld a = build_world(config, arena, CostModel{}, 42);
  const SimWorld b = build_world(config, arena, CostModel{}, 42);
  REQUIRE(a.nodes().size() == 100);
  REQUIRE(b.nodes().size() == 100);

  for (std::size_t i = 0; i < a.nodes().size(); ++i) {
    CHECK(a.nodes()[i].position == b.nodes()[i].position);
    CHECK(a.nodes()[i].neighbors == b.nodes()[i].neighbors);
    CHECK(a.nodes()[i].battery == arena.initial_battery);
  }
  CHECK(a.sinks() == b.sinks());

  const Vec2 center{arena.width / 2.0, arena.height / 2.0};
  for (const auto& sink : a.sinks()) CHECK(dist(sink, center) <= 10.0);

  const double tr = config.transmission_radius;
  for (const auto& node : a.nodes()) {
    CHECK(node.neighbors.size() <=
          static_cast<std::size_t>(config.num_neighbors));
    double previous = 0.0;
    for (int id : node.neighbors) {
      const double d = dist(node.position, a.nodes()[(std::size_t)id].position);
      CHECK(d <= tr);
      CHECK(d >= previous);  // nearest first
      previous = d;
    }
  }

  const SimWorld c = build_world(config, arena, CostModel{}, 43);
  bool all_same = true;
  for (std::size_t i = 0; i < c.nodes().size(); ++i)
    all_same = all_same && (a.nodes()[i].position == c.nodes()[i].position);
  CHECK_FALSE(all_same);
}

TEST_CASE("routing: direct delivery when a sink is in radio range") {
  SimWorld world = make_chain(1, 5);  // node at 0, sink 9 m away, radius 10
  Packet packet;
  packet.target_sink = 0;
  const RouteStep hop = route_next_hop(world, 0, packet);
  CHECK(hop.kind == RouteStep::Kind::ToSink);
  CHECK(hop.id == 0);
}

TEST_CASE("routing: exhausted hop budget fails") {
  SimWorld world = make_chain(1, 5);
  Packet packet;
  packet.target_sink = 0;
  packet.hops_used = 5;
  CHECK(route_next_hop(world, 0, packet).kind == RouteStep::Kind::Failure);
}

TEST_CASE("routing: chain traversal matches the BFS oracle") {
  for (int k : {2, 3, 5, 8}) {
    SimWorld enough = make_chain(k, k);
    CHECK(oracles::bfs_hops_to_sink(enough, 0) == k);
    CHECK(walk_to_sink(enough) == k);

    SimWorld starved = make_chain(k, k - 1);
    CHECK(walk_to_sink(starved) == -1);
  }
}

TEST_CASE("routing: a void with no closer neighbor fails") {
  // Node 0's only neighbor sits farther from the sink than node 0 does.
  WsnConfig config;
  config.transmission_radius = 15.0;
  config.num_hops = 10;
  ArenaSpec arena;
  arena.width = 60.0;
  arena.height = 20.0;
  arena.stimulus_rate = 0.0;
  SimWorld world(config, arena, CostModel{}, {{20.0, 10.0}, {10.0, 10.0}},
                 {{50.0, 10.0}}, 1);
  REQUIRE(world.nodes()[0].neighbors == std::vector<int>{1});

  Packet packet;
  packet.target_sink = 0;
  CHECK(route_next_hop(world, 0, packet).kind == RouteStep::Kind::Failure);
  // The neighbor in the wrong direction still routes packets of its own.
  CHECK(route_next_hop(world, 1, packet).kind == RouteStep::Kind::ToNode);
}

TEST_CASE("run: duration 0 charges nothing and counts nothing") {
  WsnConfig config;
  config.network_density = 0.001;
  ArenaSpec arena;
  arena.width = 100.0;
  arena.height = 100.0;
  arena.duration = 0;
  const RunRecord record = run(config, arena, CostModel{}, 9);
  CHECK(record.total_energy == 0.0);
  CHECK(record.packets_generated == 0);
  CHECK(record.packets_delivered == 0);
  CHECK(record.nodes_died == 0);
}

TEST_CASE("run: closed-form energy for isolated silent nodes") {
  // No stimuli, no scans within the duration, no neighbors: each node pays
  // e_beacon plus one self-forwarded control emission per beacon period.
  WsnConfig config;
  config.network_density = 0.0012;  // 12 nodes on 100x100
  config.transmission_radius = 0.001;
  config.sensor_interval = 60;
  ArenaSpec arena;
  arena.width = 100.0;
  arena.height = 100.0;
  arena.stimulus_rate = 0.0;
  arena.duration = 50;
  CostModel cost;
  cost.beacon_period = 7;

  const SimWorld probe = build_world(config, arena, cost, 4);
  for (const auto& node : probe.nodes()) CHECK(node.neighbors.empty());

  const RunRecord record = run(config, arena, cost, 4);
  const double expected = 12.0 * 7.0 * (cost.e_beacon + cost.e_route_ctl);
  CHECK(record.total_energy == expected);  // exact: small integer sums
  CHECK(record.packets_generated == 0);
  CHECK(record.packets_delivered == 0);

  // identical inputs -> identical record
  CHECK(run(config, arena, cost, 4) == record);
  CHECK_FALSE(run(config, arena, cost, 5) == record);
}

TEST_CASE("step: zero configured activity charges zero energy") {
  WsnConfig config;
  config.network_density = 0.001;
  config.sensor_interval = 100;  // beyond duration
  ArenaSpec arena;
  arena.width = 100.0;
  arena.height = 100.0;
  arena.stimulus_rate = 0.0;
  arena.duration = 50;
  CostModel cost;
  cost.beacon_period = 60;  // beyond duration

  SimWorld world = build_world(config, arena, cost, 7);
  for (int t = 0; t < 50; ++t) world.step();
  CHECK(world.ledger().total() == 0.0);
  CHECK(world.packets_generated() == 0);
}

TEST_CASE("step: delivery removes the packet and counts it") {
  SimWorld world = make_chain(1, 5);
  Packet packet;
  packet.origin = 0;
  packet.target_sink = 0;
  world.inject_packet(0, packet);
  CHECK(world.packets_generated() == 1);

  world.step();  // transmission_interval = 1
  CHECK(world.packets_delivered() == 1);
  CHECK(world.nodes()[0].outbox.empty());
  const double d_sq = 81.0;
  const CostModel cost;
  const double expected_tx =
      (cost.e_elec + cost.e_amp * d_sq) * cost.packet_bits;
  CHECK(world.ledger().entry(0, Activity::Transmit) ==
        doctest::Approx(expected_tx).epsilon(1e-15));
  CHECK(world.ledger().entry(0, Activity::Receive) == 0.0);  // sink is free
  CHECK(world.max_delivered_hops() <= 5);
}

TEST_CASE("step: relayed packet charges sender and receiver") {
  SimWorld world = make_chain(2, 5);  // node0 -> node1 -> sink
  Packet packet;
  packet.origin = 0;
  packet.target_sink = 0;
  world.inject_packet(0, packet);

  world.step();  // node0 forwards to node1 (one hop per opportunity)
  const CostModel cost;
  CHECK(world.packets_delivered() == 0);
  CHECK(world.nodes()[1].outbox.size() == 1);
  CHECK(world.nodes()[1].outbox[0].hops_used == 1);
  CHECK(world.ledger().entry(1, Activity::Receive) ==
        doctest::Approx(cost.e_elec * cost.packet_bits).epsilon(1e-15));

  world.step();  // node1 delivers
  CHECK(world.packets_delivered() == 1);
  CHECK(world.max_delivered_hops() == 2);
}

TEST_CASE("step: a dying node loses its queue and stops acting") {
  // Lone node with battery below one beacon+cascade round.
  WsnConfig config;
  config.transmission_radius = 0.001;
  config.sensor_interval = 1000;
  ArenaSpec arena;
  arena.width = 10.0;
  arena.height = 10.0;
  arena.stimulus_rate = 0.0;
  arena.duration = 100;
  arena.initial_battery = 25.0;  // e_beacon=20 then 5 of e_route_ctl=10
  CostModel cost;
  cost.beacon_period = 2;

  SimWorld world({config}, arena, cost, {{5.0, 5.0}}, {{9.0, 9.0}}, 1);
  Packet stuck;
  stuck.origin = 0;
  stuck.target_sink = 0;
  world.inject_packet(0, stuck);

  world.step();
  CHECK(world.nodes()[0].alive);
  world.step();  // beacon tick: 20 + min(10, 5) kills the node
  CHECK_FALSE(world.nodes()[0].alive);
  CHECK(world.nodes()[0].battery == 0.0);
  CHECK(world.nodes()[0].outbox.empty());  // queued packet lost
  CHECK(world.nodes_died() == 1);
  CHECK(world.ledger().total() == 25.0);  // drew exactly the battery

  for (int t = 0; t < 10; ++t) world.step();
  CHECK(world.ledger().total() == 25.0);  // dead node charges nothing
  CHECK(world.packets_delivered() == 0);
}

TEST_CASE("batteries never increase and conservation holds") {
  WsnConfig config;
  config.network_density = 0.002;  // 20 nodes on 100x100
  config.transmission_radius = 40.0;
  config.sense_radius = 15.0;
  config.sensor_interval = 3;
  config.transmission_interval = 2;
  config.num_sinks = 1;
  ArenaSpec arena;
  arena.width = 100.0;
  arena.height = 100.0;
  arena.stimulus_rate = 2.0;
  arena.duration = 60;
  arena.initial_battery = 1e5;  // some nodes will die

  SimWorld world = build_world(config, arena, CostModel{}, 12);
  std::vector<double> previous;
  for (const auto& node : world.nodes()) previous.push_back(node.battery);

  for (int t = 0; t < 60; ++t) {
    world.step();
    for (std::size_t i = 0; i < world.nodes().size(); ++i) {
      CHECK(world.nodes()[i].battery <= previous[i]);
      CHECK(world.nodes()[i].battery >= 0.0);
      CHECK(world.nodes()[i].alive == (world.nodes()[i].battery > 0.0));
      previous[i] = world.nodes()[i].battery;
    }
  }

  double drained = 0.0;
  for (const auto& node : world.nodes())
    drained += arena.initial_battery - node.battery;
  CHECK(world.ledger().total() ==
        doctest::Approx(drained).epsilon(1e-12));
  CHECK(world.packets_delivered() <= world.packets_generated());
  CHECK(world.nodes_died() > 0);
  CHECK(world.max_delivered_hops() <= config.num_hops);
}

TEST_CASE("sign-by-construction: activity counts move the right way") {
  ArenaSpec arena;
  arena.width = 200.0;
  arena.height = 200.0;
  arena.stimulus_rate = 3.0;
  arena.duration = 60;
  arena.initial_battery = 1e12;  // ample: no deaths interfere
  WsnConfig base;
  base.network_density = 0.001;  // 40 nodes
  base.transmission_radius = 60.0;
  base.num_sinks = 1;

  const auto counts = [&](const WsnConfig& config, Activity a) {
    SimWorld world = build_world(config, arena, CostModel{}, 99);
    for (int t = 0; t < arena.duration; ++t) world.step();
    return world.ledger().activity_count(a);
  };

  SUBCASE("more transmission_interval, never more transmit events") {
    WsnConfig slow = base;
    slow.transmission_interval = 6;
    CHECK(counts(slow, Activity::Transmit) <=
          counts(base, Activity::Transmit));
  }
  SUBCASE("more sensor_interval, never more sense events") {
    WsnConfig seldom = base;
    seldom.sensor_interval = 25;
    const auto often = counts(base, Activity::Sense);
    const auto rare = counts(seldom, Activity::Sense);
    CHECK(rare <= often);
    CHECK(often == 40u * (60 / base.sensor_interval));
  }
  SUBCASE("more num_hops, never fewer control forwards") {
    WsnConfig deep = base;
    deep.num_hops = 16;
    WsnConfig shallow = base;
    shallow.num_hops = 2;
    CHECK(counts(shallow, Activity::RouteControl) <=
          counts(deep, Activity::RouteControl));
  }
}

TEST_CASE("beacon listeners pay the receive cost") {
  // Two nodes in range of each other, nothing else enabled.
  WsnConfig config;
  config.transmission_radius = 20.0;
  config.sensor_interval = 1000;
  config.num_hops = 1;
  ArenaSpec arena;
  arena.width = 50.0;
  arena.height = 50.0;
  arena.stimulus_rate = 0.0;
  arena.duration = 10;
  CostModel cost;
  cost.beacon_period = 10;

  SimWorld world(config, arena, cost, {{10.0, 10.0}, {20.0, 10.0}},
                 {{45.0, 45.0}}, 3);
  for (int t = 0; t < 10; ++t) world.step();

  // Each node: one beacon sent, one beacon heard, one control forward.
  for (int id : {0, 1}) {
    CHECK(world.ledger().entry(id, Activity::Beacon) == cost.e_beacon);
    CHECK(world.ledger().entry(id, Activity::Receive) ==
          cost.e_elec * cost.ctl_bits);
    CHECK(world.ledger().entry(id, Activity::RouteControl) ==
          cost.e_route_ctl);
    CHECK(world.ledger().count(id, Activity::Beacon) == 1);
  }
}

TEST_CASE("sense scans charge the area-scaled cost and detect stimuli") {
  WsnConfig config;
  config.sensor_interval = 1;
  config.sense_radius = 30.0;
  config.transmission_radius = 5.0;
  ArenaSpec arena;
  arena.width = 100.0;
  arena.height = 100.0;
  arena.stimulus_rate = 0.0;  // deterministic: no random stimuli
  arena.duration = 1;
  CostModel cost;
  cost.beacon_period = 50;

  SimWorld world(config, arena, cost, {{50.0, 50.0}}, {{99.0, 99.0}}, 5);
  world.step();
  const double scan =
      cost.e_sense_base + cost.e_sense_area * kPi * 30.0 * 30.0;
  CHECK(world.ledger().entry(0, Activity::Sense) ==
        doctest::Approx(scan).epsilon(1e-15));
  CHECK(world.packets_generated() == 0);
}
