#pragma once

#include "armsrace/contest.hpp"

namespace armsrace {

// Defender's best response to attacker investment a (closed form, clamped at
// zero): d*(a) = (Phi(a) - q0 h(a) - (1-q0)) / ((1-q0) delta(a) s_eff) with
// Phi(a) = sqrt(V q0 (1-q0) h(a) delta(a) s_eff / c_d). Requires s_eff > 0.
double defender_best_response(const ModelParams& p, double a, double s_eff);

// True when the interior branch is active at a, i.e. the unclamped defender
// best response is strictly positive.
bool interior_branch_active(const ModelParams& p, double a, double s_eff);

// Breach probability along the defender's interior branch:
// q*(a) = sqrt(q0 c_d h(a) / (V (1-q0) delta(a) s_eff)).
// Throws CornerBranchError when the interior branch is inactive at a.
double interior_breach(const ModelParams& p, double a, double s_eff);

// Attacker's best response to defender posture d: maximizes
// B q(a,d) - c_a a - F [a>0] over [0, B/c_a]. Ties resolve to a = 0.
double attacker_best_response(const ModelParams& p, double d, double s_eff);

// Attacker payoff against the defender's interior-branch reaction:
// B q*(a) - c_a a (fixed cost excluded; it enters only the adopt-or-not
// comparison). Throws CornerBranchError off the interior branch.
double reduced_attacker_objective(const ModelParams& p, double a,
                                  double s_eff);

struct UniquenessReport {
  bool certified = false;
  bool h_concave = false;           // h'' < 0 analytically for the family
  bool erosion_condition = false;   // delta delta'' >= 2 delta'^2 analytically
  bool numeric_scan_ok = false;     // sqrt(h/delta) second differences <= 1e-10
  double worst_second_difference = 0.0;
};

// Family-level concavity conditions plus a 2048-point second-difference scan
// of sqrt(h/delta) over [0, 4B/c_a].
UniquenessReport uniqueness_check(const ModelParams& p);

struct EquilibriumResult {
  double d_star = 0.0;
  double a_star = 0.0;
  double q_star = 0.0;
  double r_at_eq = 0.0;
  bool interior_defender = false;
  bool interior_attacker = false;
  bool uniqueness_certified = false;
  bool used_fallback = false;  // damped best-response iteration was needed
  int iterations = 0;
};

// Simultaneous-move equilibrium. Maximizes the reduced attacker objective on
// the interior branch, cross-validates against the direct best responses, and
// falls back to damped best-response iteration when the interior route is
// inconsistent (corner interplay).
EquilibriumResult solve_equilibrium(const ModelParams& p, double s_eff);

enum class AdoptionStatus { Threshold, NeverAdopts, AlwaysAdopts };

struct ProvocationResult {
  AdoptionStatus status = AdoptionStatus::NeverAdopts;
  double d_hat = 0.0;    // smallest d making adoption weakly profitable
  bool nonmonotone = false;  // adoption gain not monotone on the bracket
};

// Defender posture level that provokes attacker adoption. Scans the net
// adoption gain g(d) over [0, 10 V/c_d]; F = 0 always adopts; g < 0 on the
// whole bracket never adopts.
ProvocationResult provocation_threshold(const ModelParams& p, double s_eff);

}  // namespace armsrace
