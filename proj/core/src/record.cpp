#include "wsnsense/record.hpp"

#include <cstdio>

#include <json.hpp>

#include "wsnsense/errors.hpp"

namespace wsnsense {

namespace {

std::string fmt_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_energy(double v) {
  // 18 significant digits: exact round-trip with digits to spare.
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17e", v);
  return buf;
}

}  // namespace

std::string to_json_line(const RunRecord& r) {
  std::string out;
  out.reserve(320);
  out += "{\"config\":{";
  out += "\"sensor_interval\":" + std::to_string(r.config.sensor_interval);
  out += ",\"sense_radius\":" + fmt_real(r.config.sense_radius);
  out += ",\"transmission_radius\":" + fmt_real(r.config.transmission_radius);
  out += ",\"transmission_interval\":" +
         std::to_string(r.config.transmission_interval);
  out += ",\"num_neighbors\":" + std::to_string(r.config.num_neighbors);
  out += ",\"num_hops\":" + std::to_string(r.config.num_hops);
  out += ",\"network_density\":" + fmt_real(r.config.network_density);
  out += ",\"num_sinks\":" + std::to_string(r.config.num_sinks);
  out += "},\"seed\":" + std::to_string(r.seed);
  out += ",\"total_energy\":" + fmt_energy(r.total_energy);
  out += ",\"packets_generated\":" + std::to_string(r.packets_generated);
  out += ",\"packets_delivered\":" + std::to_string(r.packets_delivered);
  out += ",\"nodes_died\":" + std::to_string(r.nodes_died);
  out += ",\"duration\":" + std::to_string(r.duration);
  out += "}";
  return out;
}

RunRecord record_from_json_line(const std::string& line, long line_no) {
  nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object())
    throw ParseError("malformed run record", line_no);
  try {
    RunRecord r;
    const auto& c = j.at("config");
    r.config.sensor_interval = c.at("sensor_interval").get<std::int64_t>();
    r.config.sense_radius = c.at("sense_radius").get<double>();
    r.config.transmission_radius = c.at("transmission_radius").get<double>();
    r.config.transmission_interval =
        c.at("transmission_interval").get<std::int64_t>();
    r.config.num_neighbors = c.at("num_neighbors").get<std::int64_t>();
    r.config.num_hops = c.at("num_hops").get<std::int64_t>();
    r.config.network_density = c.at("network_density").get<double>();
    r.config.num_sinks = c.at("num_sinks").get<std::int64_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.total_energy = j.at("total_energy").get<double>();
    r.packets_generated = j.at("packets_generated").get<std::int64_t>();
    r.packets_delivered = j.at("packets_delivered").get<std::int64_t>();
    r.nodes_died = j.at("nodes_died").get<std::int64_t>();
    r.duration = j.at("duration").get<std::int64_t>();

    if (r.total_energy < 0.0 || r.packets_generated < 0 ||
        r.packets_delivered < 0 || r.nodes_died < 0 || r.duration < 0)
      throw ParseError("run record has negative counters", line_no);
    if (r.packets_delivered > r.packets_generated)
      throw ParseError("packets_delivered exceeds packets_generated", line_no);
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("run record: ") + e.what(), line_no);
  }
}

}  // namespace wsnsense
