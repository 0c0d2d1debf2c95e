#pragma once

#include <string>
#include <vector>

#include "armsrace/scenario.hpp"
#include "armsrace/table.hpp"

namespace armsrace {

inline constexpr const char* kToolVersion = "0.1.0";

enum class OutputFormat { Csv, Svg, Both };

// ratio | equilibrium | dynamics | scaling | deterrence | targeting | figures
extern const std::vector<std::string> kSubcommands;

// Compute one subcommand's tables. Throws ValidationError when a required
// scenario section is missing, ComputationError on numeric failures.
std::vector<ResultTable> run_subcommand(const std::string& name,
                                        const Scenario& scenario);

// Compute and write tables under out_dir as <subcommand>_<table>.{csv,svg}.
// Returns the written file paths.
std::vector<std::string> run_and_emit(const std::string& name,
                                      const Scenario& scenario,
                                      const std::string& out_dir,
                                      OutputFormat format);

}  // namespace armsrace
