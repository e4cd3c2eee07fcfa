// Profiling campaigns: execute a sample plan (optionally on several worker
// threads) and persist the resulting dataset as JSON lines behind a single
// JSON header.
#ifndef WSNSENSE_PROFILER_HPP
#define WSNSENSE_PROFILER_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wsnsense/config.hpp"
#include "wsnsense/record.hpp"
#include "wsnsense/sampling.hpp"

namespace wsnsense {

struct ProfileDataset {
  ArenaSpec arena;
  CostModel cost;
  ParameterSpace space;
  Scheme scheme = Scheme::Uniform;
  std::uint64_t master_seed = 0;
  std::vector<RunRecord> records;

  std::size_t size() const { return records.size(); }
};

// records[i] comes from (plan.configs[i], plan.seeds[i]); order matches the
// plan regardless of the worker count. All configurations are validated
// before any run starts, so a bad plan aborts naming the lowest failing
// index.
ProfileDataset execute_plan(const SamplePlan& plan, const ArenaSpec& arena,
                            const CostModel& cost, int workers);

// File layout: line 1 a JSON header (arena, cost, space, scheme,
// master_seed, m), then one RunRecord JSON object per line. Byte-stable for
// identical inputs.
void save_dataset(const ProfileDataset& dataset, std::ostream& out);
void save_dataset(const ProfileDataset& dataset, const std::string& path);
ProfileDataset load_dataset(std::istream& in, const std::string& origin);
ProfileDataset load_dataset(const std::string& path);

std::string header_json_line(const ProfileDataset& dataset);

}  // namespace wsnsense

#endif
