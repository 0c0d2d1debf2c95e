// arms-race-lab: command line front end for the attacker/defender contest
// library.  Every subcommand reads one scenario file, runs the corresponding
// analysis, and writes CSV (and optionally SVG) artifacts into --out-dir.
#include <cstdio>
#include <exception>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "armsrace/errors.hpp"
#include "armsrace/scenario.hpp"
#include "armsrace/subcommands.hpp"

namespace {

struct CliOptions {
  std::string scenario_path;
  std::string out_dir;
  std::string format = "csv";
  std::optional<std::uint64_t> seed;
};

int run(const std::string& subcommand, const CliOptions& opt) {
  armsrace::Scenario scenario = armsrace::load_scenario_file(opt.scenario_path);
  if (opt.seed) scenario.seed = *opt.seed;

  armsrace::OutputFormat format = armsrace::OutputFormat::Csv;
  if (opt.format == "svg") {
    format = armsrace::OutputFormat::Svg;
  } else if (opt.format == "both") {
    format = armsrace::OutputFormat::Both;
  }

  const std::vector<std::string> written =
      armsrace::run_and_emit(subcommand, scenario, opt.out_dir, format);
  for (const std::string& path : written) {
    std::printf("wrote %s\n", path.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical laboratory for attacker/defender contest models"};
  app.require_subcommand(1);

  CliOptions opt;
  std::string active;
  for (const std::string& name : armsrace::kSubcommands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--scenario", opt.scenario_path, "scenario file (key=value)")
        ->required();
    sub->add_option("--out-dir", opt.out_dir, "output directory")->required();
    sub->add_option("--format", opt.format, "csv|svg|both")
        ->check(CLI::IsMember({"csv", "svg", "both"}));
    sub->add_option("--seed", opt.seed, "override the scenario seed");
    sub->callback([&active, name] { active = name; });
  }

  CLI11_PARSE(app, argc, argv);

  try {
    return run(active, opt);
  } catch (const armsrace::ValidationError& e) {
    std::fprintf(stderr, "validation error: %s\n", e.what());
    return 1;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "validation error: %s\n", e.what());
    return 1;
  } catch (const armsrace::ComputationError& e) {
    std::fprintf(stderr, "computation error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "computation error: %s\n", e.what());
    return 2;
  }
}
