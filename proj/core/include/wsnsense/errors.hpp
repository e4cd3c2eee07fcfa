#ifndef WSNSENSE_ERRORS_HPP
#define WSNSENSE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wsnsense {

// Invalid configuration value or invariant violation (empty network,
// non-positive field, bad bounds, unknown key in a config file).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input file. Carries the 1-based line number when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, long line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg
                                    : msg),
        line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

// Structurally valid input that contradicts itself (e.g. a dataset whose
// header reappears mid-file with different arena or cost values).
class IntegrityError : public std::runtime_error {
 public:
  explicit IntegrityError(const std::string& msg) : std::runtime_error(msg) {}
};

// Statistical operation asked to divide by a zero spread (constant series).
class DegenerateInputError : public std::runtime_error {
 public:
  explicit DegenerateInputError(const std::string& msg)
      : std::runtime_error(msg) {}
};

}  // namespace wsnsense

#endif
