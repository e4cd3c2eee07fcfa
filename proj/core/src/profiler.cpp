#include "wsnsense/profiler.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wsnsense/errors.hpp"
#include "wsnsense/parallel.hpp"
#include "wsnsense/world.hpp"

namespace wsnsense {

namespace {

std::string fmt_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string space_json(const ParameterSpace& space) {
  std::string out = "{";
  for (int i = 0; i < kParamCount; ++i) {
    const auto& b = space.at(i);
    if (i > 0) out += ",";
    out += "\"" + param_names()[static_cast<std::size_t>(i)] + "\":{";
    out += "\"low\":" + fmt_real(b.low);
    out += ",\"high\":" + fmt_real(b.high);
    out += ",\"kind\":\"";
    out += (param_kind(i) == ParamKind::Integer ? "integer" : "real");
    out += "\"}";
  }
  out += "}";
  return out;
}

ArenaSpec arena_from_json(const nlohmann::json& j) {
  ArenaSpec a;
  a.width = j.at("width").get<double>();
  a.height = j.at("height").get<double>();
  a.stimulus_rate = j.at("stimulus_rate").get<double>();
  a.duration = j.at("duration").get<std::int64_t>();
  a.initial_battery = j.at("initial_battery").get<double>();
  return a;
}

CostModel cost_from_json(const nlohmann::json& j) {
  CostModel c;
  c.e_elec = j.at("e_elec").get<double>();
  c.e_amp = j.at("e_amp").get<double>();
  c.e_sense_base = j.at("e_sense_base").get<double>();
  c.e_sense_area = j.at("e_sense_area").get<double>();
  c.e_beacon = j.at("e_beacon").get<double>();
  c.e_route_ctl = j.at("e_route_ctl").get<double>();
  c.packet_bits = j.at("packet_bits").get<double>();
  c.ctl_bits = j.at("ctl_bits").get<double>();
  c.beacon_period = j.at("beacon_period").get<std::int64_t>();
  return c;
}

ParameterSpace space_from_json(const nlohmann::json& j) {
  ParameterSpace s;
  for (int i = 0; i < kParamCount; ++i) {
    const auto& b = j.at(param_names()[static_cast<std::size_t>(i)]);
    s.at(i).low = b.at("low").get<double>();
    s.at(i).high = b.at("high").get<double>();
  }
  return s;
}

struct Header {
  ArenaSpec arena;
  CostModel cost;
  ParameterSpace space;
  Scheme scheme;
  std::uint64_t master_seed;
  std::size_t m;
};

bool looks_like_header(const nlohmann::json& j) {
  return j.is_object() && j.contains("arena");
}

Header header_from_json(const nlohmann::json& j, long line_no) {
  try {
    Header h;
    h.arena = arena_from_json(j.at("arena"));
    h.cost = cost_from_json(j.at("cost"));
    h.space = space_from_json(j.at("space"));
    h.scheme = scheme_from_name(j.at("scheme").get<std::string>());
    h.master_seed = j.at("master_seed").get<std::uint64_t>();
    h.m = j.at("m").get<std::size_t>();
    return h;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("dataset header: ") + e.what(), line_no);
  }
}

}  // namespace

std::string header_json_line(const ProfileDataset& d) {
  std::string out;
  out.reserve(640);
  out += "{\"arena\":{";
  out += "\"width\":" + fmt_real(d.arena.width);
  out += ",\"height\":" + fmt_real(d.arena.height);
  out += ",\"stimulus_rate\":" + fmt_real(d.arena.stimulus_rate);
  out += ",\"duration\":" + std::to_string(d.arena.duration);
  out += ",\"initial_battery\":" + fmt_real(d.arena.initial_battery);
  out += "},\"cost\":{";
  out += "\"e_elec\":" + fmt_real(d.cost.e_elec);
  out += ",\"e_amp\":" + fmt_real(d.cost.e_amp);
  out += ",\"e_sense_base\":" + fmt_real(d.cost.e_sense_base);
  out += ",\"e_sense_area\":" + fmt_real(d.cost.e_sense_area);
  out += ",\"e_beacon\":" + fmt_real(d.cost.e_beacon);
  out += ",\"e_route_ctl\":" + fmt_real(d.cost.e_route_ctl);
  out += ",\"packet_bits\":" + fmt_real(d.cost.packet_bits);
  out += ",\"ctl_bits\":" + fmt_real(d.cost.ctl_bits);
  out += ",\"beacon_period\":" + std::to_string(d.cost.beacon_period);
  out += "},\"space\":" + space_json(d.space);
  out += ",\"scheme\":\"" + scheme_name(d.scheme) + "\"";
  out += ",\"master_seed\":" + std::to_string(d.master_seed);
  out += ",\"m\":" + std::to_string(d.records.size());
  out += "}";
  return out;
}

ProfileDataset execute_plan(const SamplePlan& plan, const ArenaSpec& arena,
                            const CostModel& cost, int workers) {
  if (plan.configs.size() != plan.seeds.size())
    throw ConfigError("sample plan configs and seeds differ in length");
  if (workers < 1) throw ConfigError("workers must be >= 1");

  // Validate everything before any run starts so a failing plan aborts
  // deterministically with the lowest bad index.
  validate(arena);
  validate(cost);
  for (std::size_t i = 0; i < plan.configs.size(); ++i) {
    try {
      validate(plan.configs[i], arena);
    } catch (const ConfigError& e) {
      throw ConfigError("plan index " + std::to_string(i) + ": " + e.what());
    }
  }

  ProfileDataset dataset;
  dataset.arena = arena;
  dataset.cost = cost;
  dataset.space = plan.space;
  dataset.scheme = plan.scheme;
  dataset.master_seed = plan.master_seed;
  dataset.records.resize(plan.configs.size());

  parallel_for_index(plan.configs.size(), workers, [&](std::size_t i) {
    dataset.records[i] = run(plan.configs[i], arena, cost, plan.seeds[i]);
  });
  return dataset;
}

void save_dataset(const ProfileDataset& dataset, std::ostream& out) {
  out << header_json_line(dataset) << '\n';
  for (const auto& record : dataset.records)
    out << to_json_line(record) << '\n';
}

void save_dataset(const ProfileDataset& dataset, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open for writing: " + path);
  save_dataset(dataset, out);
  out.flush();
  if (!out) throw ConfigError("write failed: " + path);
}

ProfileDataset load_dataset(std::istream& in, const std::string& origin) {
  std::string line;
  long line_no = 0;

  if (!std::getline(in, line))
    throw ParseError(origin + ": empty dataset (missing header)", 1);
  ++line_no;
  nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
  if (j.is_discarded() || !looks_like_header(j))
    throw ParseError(origin + ": malformed dataset header", 1);
  const Header header = header_from_json(j, 1);

  ProfileDataset dataset;
  dataset.arena = header.arena;
  dataset.cost = header.cost;
  dataset.space = header.space;
  dataset.scheme = header.scheme;
  dataset.master_seed = header.master_seed;
  dataset.records.reserve(header.m);

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty())
      throw ParseError(origin + ": blank line", line_no);
    nlohmann::json parsed = nlohmann::json::parse(line, nullptr, false);
    if (parsed.is_discarded())
      throw ParseError(origin + ": malformed line", line_no);
    if (looks_like_header(parsed)) {
      const Header again = header_from_json(parsed, line_no);
      if (!(again.arena == header.arena) || !(again.cost == header.cost))
        throw IntegrityError(origin + ": line " + std::to_string(line_no) +
                             ": header changed mid-file (arena/cost differ)");
      continue;
    }
    dataset.records.push_back(record_from_json_line(line, line_no));
  }

  if (dataset.records.size() != header.m)
    throw IntegrityError(origin + ": header declares m=" +
                         std::to_string(header.m) + " but file holds " +
                         std::to_string(dataset.records.size()) + " records");
  return dataset;
}

ProfileDataset load_dataset(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open dataset: " + path);
  return load_dataset(in, path);
}

}  // namespace wsnsense
