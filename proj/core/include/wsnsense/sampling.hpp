// Configuration-space sampling for profiling campaigns: per-parameter
// bounds, uniform and latin-hypercube designs, and splittable per-run seeds.
#ifndef WSNSENSE_SAMPLING_HPP
#define WSNSENSE_SAMPLING_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "wsnsense/config.hpp"
#include "wsnsense/settings.hpp"

namespace wsnsense {

struct ParamBounds {
  double low = 0.0;
  double high = 0.0;
};

// Bounds for each of the eight WsnConfig parameters, indexed like
// param_names(). Integer parameters sample the inclusive integer range.
struct ParameterSpace {
  std::array<ParamBounds, kParamCount> bounds;

  const ParamBounds& at(int index) const { return bounds[static_cast<std::size_t>(index)]; }
  ParamBounds& at(int index) { return bounds[static_cast<std::size_t>(index)]; }

  // Throws ConfigError on low >= high, non-integral integer bounds, or an
  // integer range narrower than one step.
  void validate() const;

  bool contains(int index, double value) const;

  friend bool operator==(const ParameterSpace&, const ParameterSpace&) = default;
};

// Desk-scale default ranges on the 500x500 arena.
ParameterSpace default_space();

// Reads `<param>.low` / `<param>.high` keys, falling back to defaults.
ParameterSpace load_space(const Settings& settings);

enum class Scheme { Uniform, LatinHypercube };
std::string scheme_name(Scheme scheme);
Scheme scheme_from_name(const std::string& name);  // throws ConfigError

struct SamplePlan {
  ParameterSpace space;
  Scheme scheme = Scheme::Uniform;
  std::uint64_t master_seed = 0;
  std::vector<WsnConfig> configs;
  std::vector<std::uint64_t> seeds;  // seeds[i] = split_seed(master_seed, i)
  // Pre-quantization samples in [0,1)^8, one row per config. Kept so
  // stratum occupancy stays checkable for integer parameters, whose
  // quantized values can alias strata when M exceeds the integer range.
  std::vector<std::array<double, kParamCount>> unit_samples;

  std::size_t size() const { return configs.size(); }
};

// Draws M configurations. Uniform: every dimension independent. Latin
// hypercube: M strata per dimension, exactly one sample per stratum, with
// seeded stratum permutations per dimension.
SamplePlan sample_configs(const ParameterSpace& space, std::size_t m,
                          Scheme scheme, std::uint64_t master_seed);

}  // namespace wsnsense

#endif
