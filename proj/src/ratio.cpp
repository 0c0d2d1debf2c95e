#include "armsrace/ratio.hpp"

#include <algorithm>
#include <cmath>

namespace armsrace {

namespace {

void require_signal(double s, const char* what) {
  if (!(s > 0.0)) {
    throw SingularConfiguration(std::string(what) +
                                ": zero signal leaves the defender without "
                                "any detection channel");
  }
}

}  // namespace

double r0_single(const ModelParams& p) {
  require_signal(p.s, "r0_single");
  return p.h.alpha / (p.delta.delta0 * p.s);
}

RatioReport r_general(const ModelParams& p, double a, double d, double s_eff) {
  if (!(a >= 0.0)) throw std::domain_error("a must be >= 0");
  if (!(d >= 0.0)) throw std::domain_error("d must be >= 0");
  require_signal(s_eff, "r_general");
  const double hv = eval_h(p.h, a);
  const double dv = eval_delta(p.delta, a);
  RatioReport rep;
  rep.r0 = p.h.alpha / (p.delta.delta0 * s_eff);
  rep.amplification_component =
      h_prime(p.h, a) * (1.0 + dv * d * s_eff) / (hv * dv * s_eff);
  rep.erosion_premium = std::fabs(delta_prime(p.delta, a)) * d / dv;
  rep.r_general = rep.amplification_component + rep.erosion_premium;
  return rep;
}

double r0_multi_at(const ModelParams& p, double N, double rho, double gamma,
                   double s) {
  require_signal(s, "r0_multi");
  const double base = p.h.alpha / (p.delta.delta0 * s);
  // rho endpoints bypass pow so exact identities (N/N = 1 at gamma = 1,
  // rho = 1) survive in floating point.
  const double n_pow = rho == 1.0 ? N : (rho == 0.0 ? 1.0 : std::pow(N, rho));
  const double corr = 1.0 + gamma * (N - 1.0);
  return base * (n_pow / corr);
}

double r0_multi(const ModelParams& p, const SurfaceConfig& cfg) {
  return r0_multi_at(p, static_cast<double>(cfg.N), cfg.rho, cfg.gamma, cfg.s);
}

double dgamma_sensitivity_at_zero(const ModelParams& p,
                                  const SurfaceConfig& cfg) {
  require_signal(cfg.s, "dgamma_sensitivity_at_zero");
  const double N = static_cast<double>(cfg.N);
  const double n_pow = cfg.rho == 1.0 ? N : std::pow(N, cfg.rho);
  return -p.h.alpha * n_pow * (N - 1.0) / (p.delta.delta0 * cfg.s);
}

CriticalSurface critical_surface_count(const ModelParams& p, double rho,
                                       double gamma, double s) {
  if (!(rho > 0.0 && rho <= 1.0)) {
    throw std::domain_error(
        "critical_surface_count requires rho in (0, 1]: at rho = 0 the "
        "dilution channel is absent");
  }
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw std::domain_error("gamma must lie in [0, 1]");
  }
  require_signal(s, "critical_surface_count");

  const double alpha = p.h.alpha;
  const double ds = p.delta.delta0 * s;
  // F(N) = alpha N^rho - delta0 s (1 + gamma (N - 1)); R0 > 1  <=>  F > 0.
  const auto F = [&](double N) {
    const double n_pow = rho == 1.0 ? N : std::pow(N, rho);
    return alpha * n_pow - ds * (1.0 + gamma * (N - 1.0));
  };

  CriticalSurface out;
  constexpr double kLo = 1.0;
  constexpr double kHi = 1e12;
  constexpr int kScan = 1024;

  // Log-spaced scan catches sign changes across twelve decades.
  const double log_lo = std::log(kLo);
  const double log_hi = std::log(kHi);
  double prev_n = kLo;
  double prev_f = F(kLo);
  int sign_changes = 0;
  double bracket_lo = 0.0, bracket_hi = 0.0;
  if (prev_f == 0.0) {
    sign_changes = 1;
    bracket_lo = bracket_hi = kLo;
  }
  for (int i = 1; i < kScan; ++i) {
    const double n = std::exp(log_lo + (log_hi - log_lo) *
                                           static_cast<double>(i) /
                                           static_cast<double>(kScan - 1));
    const double fv = F(n);
    if (fv == 0.0 || (fv > 0.0) != (prev_f > 0.0)) {
      ++sign_changes;
      if (sign_changes == 1) {
        bracket_lo = prev_n;
        bracket_hi = n;
      }
    }
    prev_n = n;
    prev_f = fv;
  }
  out.multiple_roots_possible = sign_changes > 1;
  if (sign_changes == 0) return out;  // NoThreshold

  // Bisection on the first bracket; 200 halvings reach machine precision.
  double lo = bracket_lo, hi = bracket_hi;
  if (lo == hi) {
    out.n_star = lo;
  } else {
    double flo = F(lo);
    if (flo == 0.0) {
      out.n_star = lo;
    } else {
      for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = F(mid);
        if (fm == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((fm > 0.0) == (flo > 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      out.n_star = 0.5 * (lo + hi);
    }
  }
  out.found = true;

  // Smallest integer at/above the root where R0 strictly exceeds 1.
  double n_int = std::max(1.0, std::floor(out.n_star));
  while (n_int < out.n_star + 2.5 &&
         !(r0_multi_at(p, n_int, rho, gamma, s) > 1.0)) {
    n_int += 1.0;
  }
  out.n_star_integer =
      (r0_multi_at(p, n_int, rho, gamma, s) > 1.0) ? n_int
                                                   : std::ceil(out.n_star);

  // dN*/dgamma = delta0 s (N* - 1) / (alpha rho N*^(rho-1) - delta0 s gamma).
  const double denom =
      alpha * rho * std::pow(out.n_star, rho - 1.0) - ds * gamma;
  if (std::fabs(denom) < 1e-12 * std::max(1.0, alpha)) {
    out.degenerate_derivative = true;
  } else {
    out.dn_star_dgamma = ds * (out.n_star - 1.0) / denom;
  }
  return out;
}

std::vector<SweepRow> sweep_r0(const ModelParams& p, const SurfaceConfig& cfg,
                               SweepAxis axis,
                               const std::vector<double>& grid) {
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (double x : grid) {
    SweepRow row;
    row.axis_value = x;
    double N = static_cast<double>(cfg.N);
    double rho = cfg.rho;
    double gamma = cfg.gamma;
    switch (axis) {
      case SweepAxis::N:
        N = x;
        if (!(x >= 1.0)) row.error = "N out of domain [1, inf)";
        break;
      case SweepAxis::Gamma:
        gamma = x;
        if (!(x >= 0.0 && x <= 1.0)) row.error = "gamma out of domain [0, 1]";
        break;
      case SweepAxis::Rho:
        rho = x;
        if (!(x >= 0.0 && x <= 1.0)) row.error = "rho out of domain [0, 1]";
        break;
    }
    if (row.error.empty()) {
      row.r0 = r0_multi_at(p, N, rho, gamma, cfg.s);
      row.ok = true;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace armsrace
