#pragma once

#include <vector>

#include "armsrace/multisurface.hpp"

namespace armsrace {

// Complexity-deterrence setting: an attacker chooses between a simple
// single-surface attack (amplification h_simple) and a complex attack that
// touches N_a surfaces (amplification h_complex, pointwise above h_simple)
// but lights up cross-surface correlation min(gamma_a, gamma_d).
//
// A complex campaign spreads its variable investment evenly over its
// footprint: total investment a buys per-surface effort a / N_a, so each
// surface contests with h_complex(a/N_a) and delta(a/N_a). This is the
// tradeoff that makes deterrence possible at all — if the full a applied to
// every surface, the N_a-fold aggregation would dominate the worst-case
// signal amplification (1 + gamma(N_a - 1)) <= N_a and the complex attack
// would be profitable for every gamma_d.
//
// The simple attack faces the full signal budget s by default; with
// simple_attack_diluted it faces s / N_a^rho instead. The comparison excludes
// the fixed adoption cost F: it cancels when both attack styles adopt AI.
struct DeterrenceScenario {
  ModelParams base;
  double d_fixed;              // defender posture held fixed, >= 0
  AmplificationSpec h_simple;
  AmplificationSpec h_complex; // must dominate h_simple pointwise (N_a >= 2)
  int N_a;                     // complex-attack footprint, >= 1; 1 = degenerate
  double gamma_a;              // attacker-side correlation cap, in (0, 1]
  double rho;                  // dilution exponent, in [0, 1]
  bool simple_attack_diluted = false;
  bool defender_best_responds = false;  // re-solve d per attack type

  DeterrenceScenario(ModelParams base, double d_fixed,
                     AmplificationSpec h_simple, AmplificationSpec h_complex,
                     int N_a, double gamma_a, double rho,
                     bool simple_attack_diluted = false,
                     bool defender_best_responds = false);
};

struct DeltaPiReport {
  double value = 0.0;      // complex-minus-simple payoff advantage
  double p_complex = 0.0;  // overall breach prob. of the complex attack
  double p_simple = 0.0;   // breach probability of the simple attack
  double a_complex = 0.0;  // optimal investment in the complex attack
  double a_simple = 0.0;   // optimal investment in the simple attack
  double d_complex = 0.0;  // defender posture used against each attack
  double d_simple = 0.0;
};

// Delta-pi(gamma_d) = B [P_c - P_s] - c_a [a_c* - a_s*], each attack evaluated
// at its own optimal investment under realized gamma = min(gamma_a, gamma_d).
double delta_pi(const DeterrenceScenario& sc, double gamma_d);
DeltaPiReport delta_pi_report(const DeterrenceScenario& sc, double gamma_d);

enum class DeterrenceStatus {
  Threshold,                // interior root on (0, gamma_a)
  ComplexNeverProfitable,   // delta_pi(0) <= 0
  ComplexAlwaysProfitable,  // delta_pi(gamma_a) >= 0
};

struct DeterrenceThreshold {
  DeterrenceStatus status = DeterrenceStatus::Threshold;
  double gamma_d_star = 0.0;
  bool monotonicity_violated = false;
  double delta_pi_at_zero = 0.0;
  double delta_pi_at_gamma_a = 0.0;
};

// Smallest gamma_d in [0, gamma_a] with delta_pi = 0, found by a 128-point
// scan plus bisection to |delta_pi| < 1e-9. Beyond gamma_a the realized
// correlation is capped, so delta_pi is flat there.
DeterrenceThreshold deterrence_threshold(const DeterrenceScenario& sc);

enum class ThresholdParameter {
  SignalBudget,        // base.s
  ComplexAlpha,        // h_complex.alpha
  AttackerBenefit,     // base.B
  AttackerUnitCost,    // base.c_a
  DefenderInvestment,  // d_fixed
};

// d(gamma_d*)/d(parameter) by central-difference re-solve, cross-checked
// against the implicit-function ratio -d(delta_pi)/dx / d(delta_pi)/d(gamma_d)
// to 1e-3 relative agreement. Throws DegenerateSensitivityError when the
// gamma-derivative vanishes.
double threshold_sensitivity(const DeterrenceScenario& sc,
                             ThresholdParameter parameter, double step);

// One potential victim in the target-selection problem.
struct DefenderProfile {
  double d;      // defender posture, >= 0
  double s;      // signal budget, >= 0
  double gamma;  // in [0, 1]
  int N;         // >= 1
  double B;      // attacker's benefit from breaching this defender, >= 0
  double V;      // defender's own loss (carried for reporting), >= 0
};

enum class TargetingMode { FixedA, BestResponsePerTarget };

struct TargetRow {
  int index = 0;
  double a = 0.0;
  double q = 0.0;               // overall breach probability against target
  double expected_value = 0.0;  // B_k * q_k
  double net_payoff = 0.0;      // B_k q_k - c_a a_k - F [a_k > 0]
};

struct TargetSelection {
  int selected = 0;
  std::vector<TargetRow> table;
};

// Pick the most attractive defender: argmax expected value (FixedA) or argmax
// net payoff (BestResponsePerTarget). Ties resolve to the lowest index. The
// attacker side of `base` (q0, families, c_a, F) applies to every defender;
// rho is shared signal-processing technology.
TargetSelection select_target(const ModelParams& base,
                              const std::vector<DefenderProfile>& profiles,
                              TargetingMode mode, double fixed_a, double rho);

struct RedirectionRow {
  int index = 0;
  double ev_before = 0.0;
  double ev_after = 0.0;
  bool was_target = false;
  bool is_target = false;
};

struct RedirectionReport {
  int before = 0;
  int after = 0;
  std::vector<RedirectionRow> rows;  // empty when redirection is impossible
};

// Effect of defender k hardening by d_step on who gets targeted. A
// single-defender list cannot redirect; the table comes back empty.
RedirectionReport redirection_effect(const ModelParams& base,
                                     const std::vector<DefenderProfile>& profiles,
                                     int k, double d_step, TargetingMode mode,
                                     double fixed_a, double rho);

}  // namespace armsrace
