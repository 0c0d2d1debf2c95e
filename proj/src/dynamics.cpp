#include "armsrace/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace armsrace {

namespace {

void check_eta(double eta) {
  if (!(eta > 0.0 && eta <= 1.0)) {
    throw std::domain_error("eta must lie in (0, 1]");
  }
}

double sup_residual(const ModelParams& p, double s_eff, const State& x) {
  const double dbr = defender_best_response(p, x.second, s_eff);
  const double abr = attacker_best_response(p, x.first, s_eff);
  return std::max(std::fabs(dbr - x.first), std::fabs(abr - x.second));
}

}  // namespace

State step_discrete(const ModelParams& p, double s_eff, State state,
                    double eta) {
  check_eta(eta);
  const double dbr = defender_best_response(p, state.second, s_eff);
  const double abr = attacker_best_response(p, state.first, s_eff);
  return {state.first + eta * (dbr - state.first),
          state.second + eta * (abr - state.second)};
}

Trajectory simulate_discrete(const ModelParams& p, double s_eff, State start,
                             double eta, int max_steps, double tol) {
  check_eta(eta);
  if (!(start.first >= 0.0 && start.second >= 0.0)) {
    throw std::domain_error("start must lie in the nonnegative orthant");
  }
  if (max_steps < 1) throw std::domain_error("max_steps must be >= 1");
  if (!(tol > 0.0)) throw std::domain_error("tol must be > 0");

  Trajectory tr;
  State x = start;
  tr.times.push_back(0.0);
  tr.d_path.push_back(x.first);
  tr.a_path.push_back(x.second);

  bool prev_adopting = attacker_best_response(p, x.first, s_eff) > 0.0;
  std::deque<double> window;
  double resid = sup_residual(p, s_eff, x);

  for (int step = 1; step <= max_steps; ++step) {
    const double dbr = defender_best_response(p, x.second, s_eff);
    const double abr = attacker_best_response(p, x.first, s_eff);
    const bool adopting = abr > 0.0;
    if (adopting != prev_adopting) {
      tr.discontinuity_steps.push_back(static_cast<std::size_t>(step));
    }
    prev_adopting = adopting;

    resid = std::max(std::fabs(dbr - x.first), std::fabs(abr - x.second));
    x.first += eta * (dbr - x.first);
    x.second += eta * (abr - x.second);
    tr.times.push_back(static_cast<double>(step));
    tr.d_path.push_back(x.first);
    tr.a_path.push_back(x.second);

    window.push_back(resid);
    if (window.size() > 50) window.pop_front();
    if (window.size() == 50 && resid > 1e3 * tol) {
      bool nondecreasing = true;
      for (std::size_t i = 1; i < window.size(); ++i) {
        if (window[i] < window[i - 1]) {
          nondecreasing = false;
          break;
        }
      }
      if (nondecreasing) {
        tr.divergence_detected = true;
        break;
      }
    }

    // Step change = eta * residual, so this is the < tol*eta stop rule.
    if (resid < tol) break;
  }

  tr.sup_norm_residual = sup_residual(p, s_eff, x);
  tr.converged = tr.sup_norm_residual < 1e-6 && !tr.divergence_detected;
  if (tr.converged) tr.fixed_point = x;
  return tr;
}

Trajectory simulate_continuous(const ModelParams& p, double s_eff, State start,
                               double t_end, double dt) {
  if (!(start.first >= 0.0 && start.second >= 0.0)) {
    throw std::domain_error("start must lie in the nonnegative orthant");
  }
  if (!(dt > 0.0) || !(t_end >= 0.0)) {
    throw std::domain_error("require dt > 0 and t_end >= 0");
  }

  const auto field = [&](const State& x) -> State {
    return {defender_best_response(p, x.second, s_eff) - x.first,
            attacker_best_response(p, x.first, s_eff) - x.second};
  };

  Trajectory tr;
  State x = start;
  double t = 0.0;
  tr.times.push_back(t);
  tr.d_path.push_back(x.first);
  tr.a_path.push_back(x.second);

  const int n_steps = static_cast<int>(std::ceil(t_end / dt));
  for (int i = 0; i < n_steps; ++i) {
    const double step = std::min(dt, t_end - t);
    if (step <= 0.0) break;
    const State k1 = field(x);
    const State x2 = {x.first + 0.5 * step * k1.first,
                      x.second + 0.5 * step * k1.second};
    const State k2 = field({std::max(0.0, x2.first), std::max(0.0, x2.second)});
    const State x3 = {x.first + 0.5 * step * k2.first,
                      x.second + 0.5 * step * k2.second};
    const State k3 = field({std::max(0.0, x3.first), std::max(0.0, x3.second)});
    const State x4 = {x.first + step * k3.first, x.second + step * k3.second};
    const State k4 = field({std::max(0.0, x4.first), std::max(0.0, x4.second)});

    State next = {
        x.first + step / 6.0 *
                      (k1.first + 2.0 * k2.first + 2.0 * k3.first + k4.first),
        x.second + step / 6.0 * (k1.second + 2.0 * k2.second + 2.0 * k3.second +
                                 k4.second)};
    next.first = std::max(0.0, next.first);
    next.second = std::max(0.0, next.second);
    if (!std::isfinite(next.first) || !std::isfinite(next.second)) {
      throw IntegrationFailure("simulate_continuous: non-finite state", t,
                               x.first, x.second);
    }
    x = next;
    t += step;
    tr.times.push_back(t);
    tr.d_path.push_back(x.first);
    tr.a_path.push_back(x.second);

    // The flow's speed is the best-response residual; once it is far below
    // the convergence requirement the endpoint no longer moves.
    if (sup_residual(p, s_eff, x) < 1e-10) break;
  }

  tr.sup_norm_residual = sup_residual(p, s_eff, x);
  tr.converged = tr.sup_norm_residual < 1e-6;
  if (tr.converged) tr.fixed_point = x;
  return tr;
}

StabilityReport stability_report(const ModelParams& p, double s_eff,
                                 const EquilibriumResult& eq) {
  if (!eq.interior_defender || !eq.interior_attacker) {
    throw CornerEquilibriumError(
        "stability_report requires an interior equilibrium in both "
        "coordinates");
  }
  StabilityReport rep;
  const double ha = 1e-5 * std::max(std::fabs(eq.a_star), 1e-2);
  const double hd = 1e-5 * std::max(std::fabs(eq.d_star), 1e-2);
  const double a_lo = std::max(0.0, eq.a_star - ha);
  const double d_lo = std::max(0.0, eq.d_star - hd);
  rep.br_slope_d = (defender_best_response(p, eq.a_star + ha, s_eff) -
                    defender_best_response(p, a_lo, s_eff)) /
                   (eq.a_star + ha - a_lo);
  rep.br_slope_a = (attacker_best_response(p, eq.d_star + hd, s_eff) -
                    attacker_best_response(p, d_lo, s_eff)) /
                   (eq.d_star + hd - d_lo);
  const double product = rep.br_slope_d * rep.br_slope_a;
  rep.rho0 = std::sqrt(std::fabs(product));
  rep.eta_bound = 2.0 / (rep.rho0 + 1.0);
  rep.det_j = 1.0 - product;
  if (!(rep.det_j > 0.0) || !std::isfinite(product)) {
    rep.classification = StabilityClass::Degenerate;
  } else if (product < 0.0) {
    // Complex eigenvalue pair -1 +- i rho0 of the continuous Jacobian.
    rep.classification = StabilityClass::StableSpiral;
  } else {
    rep.classification = StabilityClass::StableNode;
  }
  return rep;
}

std::pair<BestResponseCurve, BestResponseCurve> best_response_curves(
    const ModelParams& p, double s_eff, const std::vector<double>& d_grid,
    const std::vector<double>& a_grid) {
  BestResponseCurve defender, attacker;
  defender.grid = a_grid;
  attacker.grid = d_grid;
  for (double a : a_grid) {
    const double resp = defender_best_response(p, a, s_eff);
    defender.responses.push_back(resp);
    defender.clamped.push_back(!interior_branch_active(p, a, s_eff));
  }
  const double a_max = p.B / p.c_a;
  for (double d : d_grid) {
    const double resp = attacker_best_response(p, d, s_eff);
    attacker.responses.push_back(resp);
    attacker.clamped.push_back(resp == 0.0 ||
                               resp >= a_max * (1.0 - 1e-9));
  }
  return {defender, attacker};
}

}  // namespace armsrace
