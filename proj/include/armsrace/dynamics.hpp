#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "armsrace/equilibrium.hpp"

namespace armsrace {

using State = std::pair<double, double>;  // (d, a)

struct Trajectory {
  std::vector<double> times;  // step index (discrete) or time (continuous)
  std::vector<double> d_path;
  std::vector<double> a_path;
  bool converged = false;
  std::optional<State> fixed_point;
  double sup_norm_residual = 0.0;  // sup |BR(x) - x| at the final state
  bool divergence_detected = false;
  // Steps where the attacker's adopt/abstain decision flipped; the
  // best-response map jumps there.
  std::vector<std::size_t> discontinuity_steps;
};

// One damped simultaneous best-response step, eta in (0, 1].
State step_discrete(const ModelParams& p, double s_eff, State state,
                    double eta);

// Iterate step_discrete until the sup-norm step change drops below tol*eta or
// max_steps is reached. converged additionally requires the best-response
// residual to fall below 1e-6. A trailing 50-step window of non-decreasing
// residuals above 1e3*tol flags local divergence.
Trajectory simulate_discrete(const ModelParams& p, double s_eff, State start,
                             double eta = 0.15, int max_steps = 50000,
                             double tol = 1e-8);

// Continuous-time gradient-style flow d' = BR_d(a) - d, a' = BR_a(d) - a,
// integrated with classic fixed-step RK4 and clamped to the nonnegative
// orthant. Throws IntegrationFailure (carrying the last good state) on a
// non-finite state.
Trajectory simulate_continuous(const ModelParams& p, double s_eff, State start,
                               double t_end, double dt);

enum class StabilityClass { StableNode, StableSpiral, Degenerate };

struct StabilityReport {
  double br_slope_d = 0.0;  // d(BR_d)/d(a) at the equilibrium
  double br_slope_a = 0.0;  // d(BR_a)/d(d) at the equilibrium
  double rho0 = 0.0;        // sqrt(|br_slope_d * br_slope_a|)
  double eta_bound = 0.0;   // discrete damping stability bound 2/(rho0 + 1)
  double det_j = 0.0;       // 1 - slope product
  StabilityClass classification = StabilityClass::Degenerate;
};

// Local stability at an interior equilibrium (central-difference slopes,
// relative step 1e-5). Throws CornerEquilibriumError unless both interior
// flags are set.
StabilityReport stability_report(const ModelParams& p, double s_eff,
                                 const EquilibriumResult& eq);

struct BestResponseCurve {
  std::vector<double> grid;
  std::vector<double> responses;
  std::vector<bool> clamped;  // response pinned at a bound of its box
};

// Defender best response sampled over a_grid and attacker best response over
// d_grid, with clamping flags.
std::pair<BestResponseCurve, BestResponseCurve> best_response_curves(
    const ModelParams& p, double s_eff, const std::vector<double>& d_grid,
    const std::vector<double>& a_grid);

}  // namespace armsrace
