// Flat key-value settings files: one `key = value` per line, `#` comments.
// One file can carry the arena, the cost model, a baseline network
// configuration and the sampling space side by side; loaders pull out the
// keys they own and reject anything unrecognized.
#ifndef WSNSENSE_SETTINGS_HPP
#define WSNSENSE_SETTINGS_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>

namespace wsnsense {

class Settings {
 public:
  Settings() = default;

  static Settings parse_file(const std::string& path);
  static Settings parse_stream(std::istream& in, const std::string& origin);

  bool has(const std::string& key) const;
  double get_real(const std::string& key, double fallback) const;
  std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
  std::string get_string(const std::string& key,
                         const std::string& fallback) const;

  const std::map<std::string, std::string>& entries() const { return map_; }

  // Keys actually consumed by a loader; used to reject typos.
  void mark_used(const std::string& key) const;
  void require_all_used() const;

 private:
  std::map<std::string, std::string> map_;
  mutable std::map<std::string, bool> used_;
  std::string origin_;
};

}  // namespace wsnsense

#endif
