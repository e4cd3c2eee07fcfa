#include "wsnsense/sampling.hpp"

#include <cmath>

#include "wsnsense/errors.hpp"
#include "wsnsense/rng.hpp"

namespace wsnsense {

namespace {

const std::string& name_of(int index) {
  return param_names()[static_cast<std::size_t>(index)];
}

// Maps a unit sample to a parameter value. Integer dimensions quantize to
// the inclusive integer range [low, high].
double value_from_unit(const ParamBounds& b, ParamKind kind, double u) {
  if (kind == ParamKind::Integer) {
    const double range = b.high - b.low + 1.0;
    return b.low + std::floor(u * range);
  }
  return b.low + u * (b.high - b.low);
}

}  // namespace

void ParameterSpace::validate() const {
  for (int i = 0; i < kParamCount; ++i) {
    const auto& b = at(i);
    if (!(b.low < b.high))
      throw ConfigError(name_of(i) + ": bounds must satisfy low < high");
    if (!(b.low > 0.0))
      throw ConfigError(name_of(i) + ": bounds must be positive");
    if (param_kind(i) == ParamKind::Integer) {
      if (b.low != std::floor(b.low) || b.high != std::floor(b.high))
        throw ConfigError(name_of(i) + ": integer parameter needs integer bounds");
      if (b.high - b.low < 1.0)
        throw ConfigError(name_of(i) + ": integer range narrower than one step");
    }
  }
}

bool ParameterSpace::contains(int index, double value) const {
  const auto& b = at(index);
  return value >= b.low && value <= b.high;
}

ParameterSpace default_space() {
  ParameterSpace space;
  space.at(param_index("sensor_interval")) = {1.0, 30.0};
  space.at(param_index("sense_radius")) = {5.0, 50.0};
  space.at(param_index("transmission_radius")) = {20.0, 100.0};
  space.at(param_index("transmission_interval")) = {1.0, 30.0};
  space.at(param_index("num_neighbors")) = {2.0, 20.0};
  space.at(param_index("num_hops")) = {1.0, 20.0};
  space.at(param_index("network_density")) = {0.0002, 0.002};
  space.at(param_index("num_sinks")) = {1.0, 8.0};
  return space;
}

ParameterSpace load_space(const Settings& settings) {
  ParameterSpace space = default_space();
  for (int i = 0; i < kParamCount; ++i) {
    auto& b = space.at(i);
    b.low = settings.get_real(name_of(i) + ".low", b.low);
    b.high = settings.get_real(name_of(i) + ".high", b.high);
  }
  space.validate();
  return space;
}

std::string scheme_name(Scheme scheme) {
  return scheme == Scheme::Uniform ? "uniform" : "latin-hypercube";
}

Scheme scheme_from_name(const std::string& name) {
  if (name == "uniform") return Scheme::Uniform;
  if (name == "latin-hypercube" || name == "lhs") return Scheme::LatinHypercube;
  throw ConfigError("unknown sampling scheme: " + name);
}

SamplePlan sample_configs(const ParameterSpace& space, std::size_t m,
                          Scheme scheme, std::uint64_t master_seed) {
  space.validate();

  SamplePlan plan;
  plan.space = space;
  plan.scheme = scheme;
  plan.master_seed = master_seed;
  plan.configs.reserve(m);
  plan.seeds.reserve(m);
  plan.unit_samples.reserve(m);
  if (m == 0) return plan;

  Rng rng(split_seed(master_seed, seed_tag::kSampler));

  if (scheme == Scheme::Uniform) {
    for (std::size_t i = 0; i < m; ++i) {
      std::array<double, kParamCount> unit{};
      for (int d = 0; d < kParamCount; ++d)
        unit[static_cast<std::size_t>(d)] = rng.uniform01();
      plan.unit_samples.push_back(unit);
    }
  } else {
    // Latin hypercube: per dimension, one jittered sample in each of the M
    // strata, shuffled independently across dimensions.
    std::vector<std::vector<double>> columns(
        kParamCount, std::vector<double>(m));
    for (int d = 0; d < kParamCount; ++d) {
      auto& column = columns[static_cast<std::size_t>(d)];
      for (std::size_t s = 0; s < m; ++s) {
        column[s] = (static_cast<double>(s) + rng.uniform01()) /
                    static_cast<double>(m);
      }
      for (std::size_t s = m - 1; s > 0; --s) {
        const auto swap_with = static_cast<std::size_t>(
            rng.uniform_int(0, static_cast<std::int64_t>(s)));
        std::swap(column[s], column[swap_with]);
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      std::array<double, kParamCount> unit{};
      for (int d = 0; d < kParamCount; ++d)
        unit[static_cast<std::size_t>(d)] = columns[static_cast<std::size_t>(d)][i];
      plan.unit_samples.push_back(unit);
    }
  }

  for (std::size_t i = 0; i < m; ++i) {
    WsnConfig config;
    for (int d = 0; d < kParamCount; ++d) {
      const double u = plan.unit_samples[i][static_cast<std::size_t>(d)];
      set_param(config, d, value_from_unit(space.at(d), param_kind(d), u));
    }
    plan.configs.push_back(config);
    plan.seeds.push_back(split_seed(master_seed, i));
  }
  return plan;
}

}  // namespace wsnsense
