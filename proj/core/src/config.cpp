#include "wsnsense/config.hpp"

#include <cmath>

#include "wsnsense/errors.hpp"
#include "wsnsense/settings.hpp"

namespace wsnsense {

const std::array<std::string, kParamCount>& param_names() {
  static const std::array<std::string, kParamCount> names = {
      "sensor_interval",       "sense_radius",  "transmission_radius",
      "transmission_interval", "num_neighbors", "num_hops",
      "network_density",       "num_sinks",
  };
  return names;
}

int param_index(const std::string& name) {
  const auto& names = param_names();
  for (int i = 0; i < kParamCount; ++i) {
    if (names[static_cast<std::size_t>(i)] == name) return i;
  }
  return -1;
}

ParamKind param_kind(int index) {
  switch (index) {
    case 1:  // sense_radius
    case 2:  // transmission_radius
    case 6:  // network_density
      return ParamKind::Real;
    default:
      return ParamKind::Integer;
  }
}

double get_param(const WsnConfig& config, int index) {
  switch (index) {
    case 0: return static_cast<double>(config.sensor_interval);
    case 1: return config.sense_radius;
    case 2: return config.transmission_radius;
    case 3: return static_cast<double>(config.transmission_interval);
    case 4: return static_cast<double>(config.num_neighbors);
    case 5: return static_cast<double>(config.num_hops);
    case 6: return config.network_density;
    case 7: return static_cast<double>(config.num_sinks);
    default: throw ConfigError("parameter index out of range");
  }
}

void set_param(WsnConfig& config, int index, double value) {
  switch (index) {
    case 0: config.sensor_interval = static_cast<std::int64_t>(value); break;
    case 1: config.sense_radius = value; break;
    case 2: config.transmission_radius = value; break;
    case 3: config.transmission_interval = static_cast<std::int64_t>(value); break;
    case 4: config.num_neighbors = static_cast<std::int64_t>(value); break;
    case 5: config.num_hops = static_cast<std::int64_t>(value); break;
    case 6: config.network_density = value; break;
    case 7: config.num_sinks = static_cast<std::int64_t>(value); break;
    default: throw ConfigError("parameter index out of range");
  }
}

void validate(const ArenaSpec& arena) {
  if (!(arena.width > 0.0)) throw ConfigError("arena.width must be > 0");
  if (!(arena.height > 0.0)) throw ConfigError("arena.height must be > 0");
  if (!(arena.stimulus_rate >= 0.0))
    throw ConfigError("arena.stimulus_rate must be >= 0");
  if (arena.duration < 0)
    throw ConfigError("arena.duration must be >= 0");
  if (!(arena.initial_battery > 0.0))
    throw ConfigError("arena.initial_battery must be > 0");
}

void validate(const CostModel& cost) {
  const struct {
    const char* name;
    double value;
  } fields[] = {
      {"cost.e_elec", cost.e_elec},
      {"cost.e_amp", cost.e_amp},
      {"cost.e_sense_base", cost.e_sense_base},
      {"cost.e_sense_area", cost.e_sense_area},
      {"cost.e_beacon", cost.e_beacon},
      {"cost.e_route_ctl", cost.e_route_ctl},
      {"cost.packet_bits", cost.packet_bits},
      {"cost.ctl_bits", cost.ctl_bits},
      {"cost.beacon_period", static_cast<double>(cost.beacon_period)},
  };
  for (const auto& f : fields) {
    if (!(f.value > 0.0))
      throw ConfigError(std::string(f.name) + " must be > 0");
  }
}

void validate(const WsnConfig& config, const ArenaSpec& arena) {
  validate(arena);
  if (config.sensor_interval <= 0)
    throw ConfigError("sensor_interval must be > 0");
  if (!(config.sense_radius > 0.0))
    throw ConfigError("sense_radius must be > 0");
  if (!(config.transmission_radius > 0.0))
    throw ConfigError("transmission_radius must be > 0");
  if (config.transmission_interval <= 0)
    throw ConfigError("transmission_interval must be > 0");
  if (config.num_neighbors <= 0)
    throw ConfigError("num_neighbors must be > 0");
  if (config.num_hops <= 0) throw ConfigError("num_hops must be > 0");
  if (!(config.network_density > 0.0))
    throw ConfigError("network_density must be > 0");
  if (config.num_sinks <= 0) throw ConfigError("num_sinks must be > 0");

  const double diagonal = std::hypot(arena.width, arena.height);
  if (config.sense_radius > diagonal)
    throw ConfigError("sense_radius exceeds the arena diagonal");
  if (config.transmission_radius > diagonal)
    throw ConfigError("transmission_radius exceeds the arena diagonal");

  if (node_count(config, arena) < 1)
    throw ConfigError("network_density yields an empty network");
}

std::int64_t node_count(const WsnConfig& config, const ArenaSpec& arena) {
  const double product = config.network_density * arena.width * arena.height;
  // Relative guard so decimal inputs whose true product is integral do not
  // floor one short from binary rounding.
  return static_cast<std::int64_t>(std::floor(product + product * 1e-12));
}

ArenaSpec load_arena(const Settings& settings) {
  ArenaSpec arena;
  arena.width = settings.get_real("arena.width", arena.width);
  arena.height = settings.get_real("arena.height", arena.height);
  arena.stimulus_rate =
      settings.get_real("arena.stimulus_rate", arena.stimulus_rate);
  arena.duration = settings.get_int("arena.duration", arena.duration);
  arena.initial_battery =
      settings.get_real("arena.initial_battery", arena.initial_battery);
  validate(arena);
  return arena;
}

CostModel load_cost(const Settings& settings) {
  CostModel cost;
  cost.e_elec = settings.get_real("cost.e_elec", cost.e_elec);
  cost.e_amp = settings.get_real("cost.e_amp", cost.e_amp);
  cost.e_sense_base = settings.get_real("cost.e_sense_base", cost.e_sense_base);
  cost.e_sense_area = settings.get_real("cost.e_sense_area", cost.e_sense_area);
  cost.e_beacon = settings.get_real("cost.e_beacon", cost.e_beacon);
  cost.e_route_ctl = settings.get_real("cost.e_route_ctl", cost.e_route_ctl);
  cost.packet_bits = settings.get_real("cost.packet_bits", cost.packet_bits);
  cost.ctl_bits = settings.get_real("cost.ctl_bits", cost.ctl_bits);
  cost.beacon_period = settings.get_int("cost.beacon_period", cost.beacon_period);
  validate(cost);
  return cost;
}

WsnConfig load_baseline(const Settings& settings) {
  WsnConfig config;
  for (int i = 0; i < kParamCount; ++i) {
    const auto& name = param_names()[static_cast<std::size_t>(i)];
    if (!settings.has(name)) continue;
    if (param_kind(i) == ParamKind::Integer) {
      set_param(config, i, static_cast<double>(settings.get_int(name, 0)));
    } else {
      set_param(config, i, settings.get_real(name, 0.0));
    }
  }
  return config;
}

}  // namespace wsnsense
