#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wsnsense/config.hpp"
#include "wsnsense/errors.hpp"
#include "wsnsense/profiler.hpp"
#include "wsnsense/report.hpp"
#include "wsnsense/sampling.hpp"
#include "wsnsense/settings.hpp"
#include "wsnsense/sweep.hpp"
#include "wsnsense/world.hpp"

namespace wsnsense::cli {

namespace {

// All subcommands accept one shared settings file carrying arena.*, cost.*,
// the baseline parameters and the <param>.low/.high space bounds; loading
// every section up front keeps unknown-key detection strict while letting
// one file serve the whole pipeline.
struct LoadedConfig {
  ArenaSpec arena;
  CostModel cost;
  WsnConfig baseline;
  ParameterSpace space;
};

LoadedConfig load_config(const std::string& path) {
  LoadedConfig loaded;
  if (path.empty()) {
    loaded.space = default_space();
    return loaded;
  }
  const Settings settings = Settings::parse_file(path);
  loaded.arena = load_arena(settings);
  loaded.cost = load_cost(settings);
  loaded.baseline = load_baseline(settings);
  loaded.space = load_space(settings);
  settings.require_all_used();
  return loaded;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open for writing: " + path);
  out << content;
  out.flush();
  if (!out) throw ConfigError("write failed: " + path);
}

std::string valid_param_names() {
  std::string names;
  for (const auto& n : param_names()) {
    if (!names.empty()) names += ", ";
    names += n;
  }
  return names;
}

int cmd_simulate(const SimulateOptions& opt, std::ostream& out,
                 std::ostream& err) {
  const LoadedConfig cfg = load_config(opt.config_path);
  const RunRecord record = run(cfg.baseline, cfg.arena, cfg.cost, opt.seed);
  const std::string line = to_json_line(record) + "\n";
  if (opt.out.empty()) {
    out << line;
  } else {
    write_file(opt.out, line);
  }
  err << "energy=" << record.total_energy
      << " generated=" << record.packets_generated
      << " delivered=" << record.packets_delivered
      << " died=" << record.nodes_died << " ticks=" << record.duration
      << "\n";
  return kOk;
}

int cmd_profile(const ProfileOptions& opt, std::ostream& out,
                std::ostream& /*err*/) {
  const LoadedConfig cfg = load_config(opt.config_path);
  const Scheme scheme = scheme_from_name(opt.scheme);

  const auto start = std::chrono::steady_clock::now();
  const SamplePlan plan = sample_configs(
      cfg.space, static_cast<std::size_t>(opt.runs), scheme, opt.seed);
  const ProfileDataset dataset =
      execute_plan(plan, cfg.arena, cfg.cost, opt.workers);
  save_dataset(dataset, opt.out);
  const auto elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start);

  out << "runs=" << dataset.size() << " elapsed=" << elapsed.count()
      << "s out=" << opt.out << "\n";
  return kOk;
}

int cmd_analyze(const AnalyzeOptions& opt, std::ostream& out,
                std::ostream& err) {
  const ProfileDataset dataset = load_dataset(opt.dataset);
  const SensitivityReport report = extract_effective(dataset, opt.alpha);
  write_file(opt.out, report_to_csv(report));
  out << report_to_text(report);
  for (const auto& row : report.rows) {
    if (row.degenerate)
      err << "warning: " << row.parameter << ": " << row.diagnostic << "\n";
  }
  return kOk;
}

int cmd_sweep(const SweepOptions& opt, std::ostream& /*out*/,
              std::ostream& err) {
  const LoadedConfig cfg = load_config(opt.config_path);
  const int index = param_index(opt.param);
  const SweepResult result =
      run_sweep(cfg.baseline, cfg.arena, cfg.cost, cfg.space, index,
                opt.values, opt.repeats, opt.seed, opt.workers);
  write_file(opt.out, sweep_to_csv(result));
  err << "sweep of " << result.parameter << " over " << result.rows.size()
      << " values, " << opt.repeats << " repeats each -> " << opt.out << "\n";
  return kOk;
}

int cmd_report(const ReportOptions& opt, std::ostream& out,
               std::ostream& /*err*/) {
  const SensitivityReport report = report_from_csv_file(opt.in);
  const std::string text = report_to_text(report);
  if (opt.out.empty()) {
    out << text;
  } else {
    write_file(opt.out, text);
  }
  return kOk;
}

}  // namespace

ParseOutcome parse_command(const std::vector<std::string>& args) {
  CLI::App app{"Wireless sensor network energy profiling and "
               "parameter-sensitivity analysis"};
  app.require_subcommand(1);

  SimulateOptions sim;
  auto* c_sim = app.add_subcommand("simulate", "Run one simulation");
  c_sim->add_option("--config", sim.config_path, "Settings file");
  c_sim->add_option("--seed", sim.seed, "Run seed");
  c_sim->add_option("--out", sim.out, "Write the run record here (default stdout)");

  ProfileOptions prof;
  auto* c_prof = app.add_subcommand("profile", "Run a profiling campaign");
  c_prof->add_option("--config", prof.config_path, "Settings file");
  c_prof->add_option("-M,--runs", prof.runs, "Number of runs")
      ->check(CLI::NonNegativeNumber);
  c_prof->add_option("--scheme", prof.scheme, "Sampling scheme")
      ->check(CLI::IsMember({"uniform", "lhs", "latin-hypercube"}));
  c_prof->add_option("--seed", prof.seed, "Master seed");
  c_prof->add_option("--workers", prof.workers, "Worker threads")
      ->check(CLI::PositiveNumber);
  c_prof->add_option("--out", prof.out, "Dataset file to write")->required();

  AnalyzeOptions ana;
  auto* c_ana = app.add_subcommand("analyze", "Extract effective parameters");
  c_ana->add_option("--dataset", ana.dataset, "Dataset file")->required();
  c_ana->add_option("--alpha", ana.alpha, "Significance level");
  c_ana->add_option("--out", ana.out, "Report CSV to write")->required();

  SweepOptions swp;
  auto* c_swp = app.add_subcommand("sweep", "Sweep one parameter");
  c_swp->add_option("--config", swp.config_path, "Settings file");
  c_swp->add_option("--param", swp.param, "Parameter to sweep")->required();
  c_swp->add_option("--values", swp.values, "Values to sweep")
      ->required()
      ->delimiter(',');
  c_swp->add_option("--repeats", swp.repeats, "Runs per value")
      ->check(CLI::PositiveNumber);
  c_swp->add_option("--seed", swp.seed, "Master seed");
  c_swp->add_option("--workers", swp.workers, "Worker threads")
      ->check(CLI::PositiveNumber);
  c_swp->add_option("--out", swp.out, "Sweep CSV to write")->required();

  ReportOptions rep;
  auto* c_rep = app.add_subcommand("report", "Render a report CSV as text");
  c_rep->add_option("--in", rep.in, "Report CSV")->required();
  c_rep->add_option("--out", rep.out, "Write the table here (default stdout)");

  std::vector<const char*> argv;
  argv.push_back("wsnsense");
  for (const auto& a : args) argv.push_back(a.c_str());

  ParseOutcome outcome;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    outcome.exit_code = kOk;
    outcome.message = app.help();
    return outcome;
  } catch (const CLI::ParseError& e) {
    outcome.exit_code = kUsage;
    outcome.message = e.what();
    return outcome;
  }

  if (*c_sim) {
    outcome.command = sim;
  } else if (*c_prof) {
    outcome.command = prof;
  } else if (*c_ana) {
    if (!(ana.alpha > 0.0 && ana.alpha < 1.0)) {
      outcome.exit_code = kUsage;
      outcome.message = "--alpha must lie in (0, 1)";
      return outcome;
    }
    outcome.command = ana;
  } else if (*c_swp) {
    if (param_index(swp.param) < 0) {
      outcome.exit_code = kUsage;
      outcome.message = "--param must be one of: " + valid_param_names();
      return outcome;
    }
    outcome.command = swp;
  } else if (*c_rep) {
    outcome.command = rep;
  }
  return outcome;
}

int run_command(const Command& command, std::ostream& out, std::ostream& err) {
  return std::visit(
      [&](const auto& opt) -> int {
        using T = std::decay_t<decltype(opt)>;
        if constexpr (std::is_same_v<T, SimulateOptions>)
          return cmd_simulate(opt, out, err);
        else if constexpr (std::is_same_v<T, ProfileOptions>)
          return cmd_profile(opt, out, err);
        else if constexpr (std::is_same_v<T, AnalyzeOptions>)
          return cmd_analyze(opt, out, err);
        else if constexpr (std::is_same_v<T, SweepOptions>)
          return cmd_sweep(opt, out, err);
        else
          return cmd_report(opt, out, err);
      },
      command);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  const ParseOutcome parsed = parse_command(args);
  if (!parsed.command) {
    if (parsed.exit_code == kOk) {
      out << parsed.message;
    } else {
      err << "usage error: " << parsed.message << "\n";
    }
    return parsed.exit_code;
  }

  try {
    return run_command(*parsed.command, out, err);
  } catch (const ParseError& e) {
    err << "data error: " << e.what() << "\n";
    return kData;
  } catch (const IntegrityError& e) {
    err << "data error: " << e.what() << "\n";
    return kData;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << "\n";
    return kConfig;
  } catch (const std::invalid_argument& e) {
    err << "data error: " << e.what() << "\n";
    return kData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kRuntime;
  }
}

}  // namespace wsnsense::cli
