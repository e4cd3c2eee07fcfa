#ifndef WSNSENSE_RECORD_HPP
#define WSNSENSE_RECORD_HPP

#include <cstdint>
#include <string>

#include "wsnsense/config.hpp"

namespace wsnsense {

// Outcome of one simulation run: the sampled configuration, the seed, the
// overall energy consumption and the delivery counters.
struct RunRecord {
  WsnConfig config;
  std::uint64_t seed = 0;
  double total_energy = 0.0;
  std::int64_t packets_generated = 0;
  std::int64_t packets_delivered = 0;
  std::int64_t nodes_died = 0;
  std::int64_t duration = 0;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

// One JSON object per line. Key order is fixed and total_energy is printed
// with 18 significant digits so files are byte-stable and round-trip exact.
std::string to_json_line(const RunRecord& record);
RunRecord record_from_json_line(const std::string& line, long line_no);

}  // namespace wsnsense

#endif
