#pragma once

#include <optional>
#include <string>
#include <vector>

#include "armsrace/contest.hpp"

namespace armsrace {

// Arms race ratio R = (marginal breach gain per attacker unit) /
// (marginal breach reduction per defender unit). The contest denominator
// cancels, leaving an amplification component plus an erosion premium.
struct RatioReport {
  double r0;                       // status-quo ratio alpha/(delta0 s_eff)
  double r_general;                // ratio at the evaluated point
  double amplification_component;  // h'(a)(1 + delta d s_eff)/(h delta s_eff)
  double erosion_premium;          // |delta'(a)| d / delta(a)
};

// R0 = alpha / (delta0 * s) with the single-surface signal p.s.
double r0_single(const ModelParams& p);

RatioReport r_general(const ModelParams& p, double a, double d, double s_eff);

// Multi-surface status-quo ratio R0 = alpha N^rho / (delta0 s (1+gamma(N-1))).
double r0_multi(const ModelParams& p, const SurfaceConfig& cfg);

// Same formula at a real-valued surface count (grid sweeps, thresholds).
double r0_multi_at(const ModelParams& p, double N, double rho, double gamma,
                   double s);

// d(R0)/d(gamma) at gamma = 0: -alpha N^rho (N-1) / (delta0 s).
double dgamma_sensitivity_at_zero(const ModelParams& p,
                                  const SurfaceConfig& cfg);

struct CriticalSurface {
  bool found = false;        // false: R0 - 1 has no sign change on [1, 1e12]
  double n_star = 0.0;       // real root of alpha N^rho = delta0 s (1+gamma(N-1))
  double n_star_integer = 0; // smallest integer at/above the root with R0 > 1
                             // (ceil of the root when no such neighbor exists)
  std::optional<double> dn_star_dgamma;  // absent when degenerate
  bool degenerate_derivative = false;    // derivative denominator ~ 0
  bool multiple_roots_possible = false;  // >1 sign change on the scan grid
};

// Smallest N in [1, 1e12] where R0 crosses 1, by 1024-point scan plus
// bisection. Requires rho > 0.
CriticalSurface critical_surface_count(const ModelParams& p, double rho,
                                       double gamma, double s);

enum class SweepAxis { N, Gamma, Rho };

struct SweepRow {
  double axis_value = 0.0;
  double r0 = 0.0;
  bool ok = false;
  std::string error;  // set when the grid point is out of domain
};

// R0 along one structural axis; out-of-domain points are marked per-row and
// the sweep continues.
std::vector<SweepRow> sweep_r0(const ModelParams& p, const SurfaceConfig& cfg,
                               SweepAxis axis, const std::vector<double>& grid);

}  // namespace armsrace
