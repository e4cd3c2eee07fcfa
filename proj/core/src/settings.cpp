#include "wsnsense/settings.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "wsnsense/errors.hpp"

namespace wsnsense {
namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

Settings Settings::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  return parse_stream(in, path);
}

Settings Settings::parse_stream(std::istream& in, const std::string& origin) {
  Settings settings;
  settings.origin_ = origin;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw ParseError(origin + ": expected `key = value`", line_no);
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty())
      throw ParseError(origin + ": empty key", line_no);
    if (settings.map_.count(key))
      throw ParseError(origin + ": duplicate key `" + key + "`", line_no);
    settings.map_[key] = value;
  }
  return settings;
}

bool Settings::has(const std::string& key) const {
  return map_.count(key) != 0;
}

double Settings::get_real(const std::string& key, double fallback) const {
  auto it = map_.find(key);
  if (it == map_.end()) return fallback;
  mark_used(key);
  const char* text = it->second.c_str();
  char* end = nullptr;
  const double value = std::strtod(text, &end);
  if (end == text || *end != '\0')
    throw ConfigError(origin_ + ": key `" + key + "` is not a number: `" +
                      it->second + "`");
  return value;
}

std::int64_t Settings::get_int(const std::string& key,
                               std::int64_t fallback) const {
  auto it = map_.find(key);
  if (it == map_.end()) return fallback;
  mark_used(key);
  const char* text = it->second.c_str();
  char* end = nullptr;
  const long long value = std::strtoll(text, &end, 10);
  if (end == text || *end != '\0')
    throw ConfigError(origin_ + ": key `" + key + "` is not an integer: `" +
                      it->second + "`");
  return static_cast<std::int64_t>(value);
}

std::string Settings::get_string(const std::string& key,
                                 const std::string& fallback) const {
  auto it = map_.find(key);
  if (it == map_.end()) return fallback;
  mark_used(key);
  return it->second;
}

void Settings::mark_used(const std::string& key) const { used_[key] = true; }

void Settings::require_all_used() const {
  for (const auto& [key, value] : map_) {
    if (!used_.count(key))
      throw ConfigError(origin_ + ": unknown key `" + key + "`");
  }
}

}  // namespace wsnsense
