// Configuration types for a simulated wireless sensor network: the eight
// tunable network parameters, the deployment arena, and the energy cost
// model for each node activity.
#ifndef WSNSENSE_CONFIG_HPP
#define WSNSENSE_CONFIG_HPP

#include <array>
#include <cstdint>
#include <string>

namespace wsnsense {

// The eight tunable parameters treated as inputs by the sensitivity
// analysis. Intervals are in ticks, radii in meters, density in nodes/m^2.
struct WsnConfig {
  std::int64_t sensor_interval = 10;       // ticks between sensing scans
  double sense_radius = 25.0;              // stimulus detection range, m
  double transmission_radius = 60.0;       // radio range, m
  std::int64_t transmission_interval = 5;  // ticks between send opportunities
  std::int64_t num_neighbors = 6;          // neighbor-table capacity
  std::int64_t num_hops = 10;              // hop budget (TTL) per packet
  double network_density = 0.0008;         // nodes per m^2
  std::int64_t num_sinks = 2;              // sinks, placed as one cluster

  friend bool operator==(const WsnConfig&, const WsnConfig&) = default;
};

struct ArenaSpec {
  double width = 500.0;          // m
  double height = 500.0;         // m
  double stimulus_rate = 5.0;    // expected stimuli per tick
  std::int64_t duration = 240;   // ticks per run
  double initial_battery = 5e6;  // energy units per node

  friend bool operator==(const ArenaSpec&, const ArenaSpec&) = default;
};

// Energy charged per activity, in abstract energy units. The radio follows
// a first-order model: transmit (e_elec + e_amp*d^2)*bits, receive
// e_elec*bits. Sensing cost grows with the covered disc area.
struct CostModel {
  double e_elec = 50.0;        // per bit, radio electronics
  double e_amp = 0.01;         // per bit per m^2, transmit amplifier
  double e_sense_base = 5.0;   // per sensing scan
  double e_sense_area = 0.02;  // per scan per m^2 of covered disc
  double e_beacon = 20.0;      // per neighbor-monitoring beacon sent
  double e_route_ctl = 10.0;   // per control-packet forwarding hop
  double packet_bits = 1024.0;
  double ctl_bits = 128.0;
  std::int64_t beacon_period = 10;  // ticks between beacons

  friend bool operator==(const CostModel&, const CostModel&) = default;
};

// Reflection over the eight WsnConfig fields, used by the profiler (dataset
// columns), the sweep driver (override one field by name) and the report.
enum class ParamKind { Integer, Real };

inline constexpr int kParamCount = 8;

const std::array<std::string, kParamCount>& param_names();
int param_index(const std::string& name);  // -1 when unknown
ParamKind param_kind(int index);
double get_param(const WsnConfig& config, int index);
void set_param(WsnConfig& config, int index, double value);

// Throws ConfigError naming the offending field. node_count() applies the
// floor(density*area) rule; validation rejects configurations with zero
// nodes or radii beyond the arena diagonal.
void validate(const ArenaSpec& arena);
void validate(const CostModel& cost);
void validate(const WsnConfig& config, const ArenaSpec& arena);
std::int64_t node_count(const WsnConfig& config, const ArenaSpec& arena);

// Settings-file loaders. Keys: arena.width, arena.height,
// arena.stimulus_rate, arena.duration, arena.initial_battery; cost.e_elec,
// cost.e_amp, cost.e_sense_base, cost.e_sense_area, cost.e_beacon,
// cost.e_route_ctl, cost.packet_bits, cost.ctl_bits, cost.beacon_period;
// and the eight bare parameter names for the baseline configuration.
// Missing keys keep their defaults.
class Settings;
ArenaSpec load_arena(const Settings& settings);
CostModel load_cost(const Settings& settings);
WsnConfig load_baseline(const Settings& settings);

}  // namespace wsnsense

#endif
