// One-parameter sweeps with repeats: hold a baseline configuration, vary a
// single parameter over a value list, and aggregate energy and delivery
// across R seeded runs per value. Output is plot-ready CSV.
#ifndef WSNSENSE_SWEEP_HPP
#define WSNSENSE_SWEEP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "wsnsense/config.hpp"
#include "wsnsense/sampling.hpp"

namespace wsnsense {

struct SweepRow {
  double value = 0.0;
  double mean_energy = 0.0;
  double std_energy = 0.0;
  double mean_delivered = 0.0;
  double std_delivered = 0.0;
  int repeats = 0;
};

struct SweepResult {
  std::string parameter;
  std::vector<SweepRow> rows;
};

// Runs repeats seeded simulations per value, overriding `param_index` of
// the baseline. Values must lie within the space bounds (integral for
// integer parameters); throws ConfigError otherwise. Std is the sample
// standard deviation over the repeats, 0 when repeats == 1.
SweepResult run_sweep(const WsnConfig& baseline, const ArenaSpec& arena,
                      const CostModel& cost, const ParameterSpace& space,
                      int param_index, const std::vector<double>& values,
                      int repeats, std::uint64_t master_seed, int workers);

// Header: value,mean_energy,std_energy,mean_delivered,std_delivered,repeats
std::string sweep_to_csv(const SweepResult& result);

}  // namespace wsnsense

#endif
