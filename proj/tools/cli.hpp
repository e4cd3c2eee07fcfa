// Command-line front end: subcommand parsing and dispatch for the
// simulate / profile / analyze / sweep / report pipeline.
#ifndef WSNSENSE_TOOLS_CLI_HPP
#define WSNSENSE_TOOLS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace wsnsense::cli {

// sysexits-flavored codes so scripts can tell failure classes apart.
enum ExitCode : int {
  kOk = 0,
  kUsage = 64,    // bad command line
  kData = 65,     // malformed or inconsistent input files
  kRuntime = 70,  // unexpected internal failure
  kConfig = 78,   // invalid configuration values
};

struct SimulateOptions {
  std::string config_path;
  std::uint64_t seed = 1;
  std::string out;  // empty = stdout
};

struct ProfileOptions {
  std::string config_path;
  long runs = 800;
  std::string scheme = "uniform";
  std::uint64_t seed = 1;
  int workers = 1;
  std::string out;
};

struct AnalyzeOptions {
  std::string dataset;
  double alpha = 0.05;
  std::string out;
};

struct SweepOptions {
  std::string config_path;
  std::string param;
  std::vector<double> values;
  int repeats = 20;
  std::uint64_t seed = 1;
  int workers = 1;
  std::string out;
};

struct ReportOptions {
  std::string in;
  std::string out;  // empty = stdout
};

using Command = std::variant<SimulateOptions, ProfileOptions, AnalyzeOptions,
                             SweepOptions, ReportOptions>;

struct ParseOutcome {
  std::optional<Command> command;  // unset on help or usage error
  int exit_code = kOk;
  std::string message;  // help text or usage diagnostic
};

ParseOutcome parse_command(const std::vector<std::string>& args);

int run_command(const Command& command, std::ostream& out, std::ostream& err);

// parse + dispatch + exception-to-exit-code mapping.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace wsnsense::cli

#endif
