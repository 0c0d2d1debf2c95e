#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "armsrace/strategic.hpp"

namespace armsrace {

struct DynamicsConfig {
  double eta = 0.15;
  int max_steps = 50000;
  double tol = 1e-8;
  int starts = 10;     // seeded random starting points
  double t_end = 40.0; // continuous-flow horizon
  double dt = 0.05;
};

struct DeterrenceConfig {
  double d_fixed = 1.0;
  AmplificationSpec h_simple;
  AmplificationSpec h_complex;
  int N_a = 2;
  double gamma_a = 1.0;
  double rho = 1.0;
  bool simple_attack_diluted = false;
  bool defender_best_responds = false;
};

struct TargetingConfig {
  std::vector<DefenderProfile> profiles;
  TargetingMode mode = TargetingMode::FixedA;
  double fixed_a = 0.0;
  double rho = 1.0;
  double d_step = 1.0;  // hardening step for the redirection table
};

struct FigureConfig {
  double beta_low = 0.2;
  double beta_mid = 1.5;
  double beta_high = 8.0;
  double a = 1.0;      // fixed attacker investment for the scaling panel
  double d = 1.0;      // fixed defender posture for the scaling panel
  double a_max = 1.0;  // attacker-axis window for the best-response panel
  double d_max = 12.0; // defender-axis window for the best-response panel
  int n_points = 25;
  int traj_starts = 4;
};

// A parsed scenario document: flat `section.key = value` lines, `#` comments.
// `model` is required by every subcommand; other sections only by the
// subcommands that consume them.
struct Scenario {
  std::optional<ModelParams> model;
  std::optional<SurfaceConfig> surfaces;
  std::optional<DynamicsConfig> dynamics;
  std::optional<DeterrenceConfig> deterrence;
  std::optional<TargetingConfig> targeting;
  FigureConfig figures;  // always present; keys override the defaults
  std::uint64_t seed = 0;

  std::string raw_text;
  std::uint64_t hash = 0;  // FNV-1a of raw_text

  // Effective single-point signal: surfaces' per-surface effective signal
  // when that section is present, else model.s.
  double effective_s() const;

  DeterrenceScenario deterrence_scenario() const;
};

// Throws ValidationError on unknown keys (with nearest-key suggestion),
// duplicate keys (with both line numbers), malformed lines, and range
// violations (naming the admissible interval).
Scenario parse_scenario(const std::string& text);
Scenario load_scenario_file(const std::string& path);

// FNV-1a 64-bit hash used for scenario provenance in emitted metadata.
std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace armsrace
