#include "wsnsense/sweep.hpp"

#include <cmath>
#include <cstdio>

#include "wsnsense/errors.hpp"
#include "wsnsense/parallel.hpp"
#include "wsnsense/rng.hpp"
#include "wsnsense/world.hpp"

namespace wsnsense {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// Mean and sample standard deviation (ddof = 1); std is 0 for one sample.
std::pair<double, double> mean_std(const std::vector<double>& values) {
  const auto n = static_cast<double>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / n;
  if (values.size() < 2) return {mean, 0.0};
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / (n - 1.0))};
}

}  // namespace

SweepResult run_sweep(const WsnConfig& baseline, const ArenaSpec& arena,
                      const CostModel& cost, const ParameterSpace& space,
                      int param_index, const std::vector<double>& values,
                      int repeats, std::uint64_t master_seed, int workers) {
  if (param_index < 0 || param_index >= kParamCount)
    throw ConfigError("swept parameter index out of range");
  if (values.empty()) throw ConfigError("sweep needs at least one value");
  if (repeats < 1) throw ConfigError("repeats must be >= 1");

  for (double v : values) {
    if (!space.contains(param_index, v))
      throw ConfigError("sweep value " + fmt(v) + " outside bounds of " +
                        param_names()[static_cast<std::size_t>(param_index)]);
    if (param_kind(param_index) == ParamKind::Integer &&
        v != std::floor(v))
      throw ConfigError("sweep value " + fmt(v) + " must be an integer for " +
                        param_names()[static_cast<std::size_t>(param_index)]);
  }

  // One job per (value, repeat); seeds split per job index so the grid is
  // reproducible and order-independent.
  const std::size_t r = static_cast<std::size_t>(repeats);
  const std::size_t jobs = values.size() * r;
  std::vector<RunRecord> records(jobs);
  std::vector<WsnConfig> configs(values.size(), baseline);
  for (std::size_t v = 0; v < values.size(); ++v) {
    set_param(configs[v], param_index, values[v]);
    validate(configs[v], arena);
  }

  parallel_for_index(jobs, workers, [&](std::size_t i) {
    const std::size_t v = i / r;
    records[i] = run(configs[v], arena, cost, split_seed(master_seed, i));
  });

  SweepResult result;
  result.parameter = param_names()[static_cast<std::size_t>(param_index)];
  result.rows.reserve(values.size());
  for (std::size_t v = 0; v < values.size(); ++v) {
    std::vector<double> energies(r), delivered(r);
    for (std::size_t k = 0; k < r; ++k) {
      const auto& rec = records[v * r + k];
      energies[k] = rec.total_energy;
      delivered[k] = static_cast<double>(rec.packets_delivered);
    }
    const auto [mean_e, std_e] = mean_std(energies);
    const auto [mean_d, std_d] = mean_std(delivered);
    SweepRow row;
    row.value = values[v];
    row.mean_energy = mean_e;
    row.std_energy = std_e;
    row.mean_delivered = mean_d;
    row.std_delivered = std_d;
    row.repeats = repeats;
    result.rows.push_back(row);
  }
  return result;
}

std::string sweep_to_csv(const SweepResult& result) {
  std::string out =
      "value,mean_energy,std_energy,mean_delivered,std_delivered,repeats\n";
  for (const auto& row : result.rows) {
    out += fmt(row.value);
    out += ',' + fmt(row.mean_energy);
    out += ',' + fmt(row.std_energy);
    out += ',' + fmt(row.mean_delivered);
    out += ',' + fmt(row.std_delivered);
    out += ',' + std::to_string(row.repeats);
    out += '\n';
  }
  return out;
}

}  // namespace wsnsense
