#include "armsrace/optimize.hpp"

#include <cmath>
#include <stdexcept>

namespace armsrace {

namespace {

// Brent's bounded minimizer: golden-section with parabolic interpolation
// steps accepted when they stay inside the bracket and shrink fast enough.
ScalarMaximum brent_minimize(const std::function<double(double)>& f, double lo,
                             double hi, double tol, int max_iter) {
  static const double kGolden = 0.5 * (3.0 - std::sqrt(5.0));
  double a = lo, b = hi;
  double x = a + kGolden * (b - a);
  double w = x, v = x;
  double fx = f(x), fw = fx, fv = fx;
  double delta = 0.0, delta2 = 0.0;
  int it = 0;
  for (; it < max_iter; ++it) {
    const double mid = 0.5 * (a + b);
    // Keep a fixed floor on the step tolerance so tiny `tol` terminates.
    const double fract1 = tol * (1.0 + std::fabs(x)) * 0.25 + 1e-15;
    const double fract2 = 2.0 * fract1;
    if (std::fabs(x - mid) <= (fract2 - 0.5 * (b - a))) break;

    if (std::fabs(delta2) > fract1) {
      // Fit a parabola through (v, fv), (w, fw), (x, fx).
      double r = (x - w) * (fx - fv);
      double q = (x - v) * (fx - fw);
      double p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) p = -p;
      q = std::fabs(q);
      const double td = delta2;
      delta2 = delta;
      if (std::fabs(p) >= std::fabs(0.5 * q * td) || p <= q * (a - x) ||
          p >= q * (b - x)) {
        // Parabolic step rejected; fall back to golden section.
        delta2 = (x >= mid) ? a - x : b - x;
        delta = kGolden * delta2;
      } else {
        delta = p / q;
        const double u = x + delta;
        if (u - a < fract2 || b - u < fract2) {
          delta = (mid - x < 0.0) ? -fract1 : fract1;
        }
      }
    } else {
      delta2 = (x >= mid) ? a - x : b - x;
      delta = kGolden * delta2;
    }
    const double u =
        (std::fabs(delta) >= fract1)
            ? x + delta
            : x + ((delta > 0.0) ? fract1 : -fract1);
    const double fu = f(u);
    if (fu <= fx) {
      if (u >= x) a = x; else b = x;
      v = w; w = x; x = u;
      fv = fw; fw = fx; fx = fu;
    } else {
      if (u < x) a = u; else b = u;
      if (fu <= fw || w == x) {
        v = w; w = u;
        fv = fw; fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u;
        fv = fu;
      }
    }
  }
  return {x, fx, it};
}

}  // namespace

ScalarMaximum brent_maximize(const std::function<double(double)>& f, double lo,
                             double hi, double tol, int max_iter) {
  if (!(hi >= lo)) throw std::invalid_argument("brent_maximize: hi < lo");
  if (hi == lo) return {lo, f(lo), 0};
  auto neg = [&f](double x) { return -f(x); };
  ScalarMaximum m = brent_minimize(neg, lo, hi, tol, max_iter);
  m.value = -m.value;
  return m;
}

ScalarMaximum scan_maximize(const std::function<double(double)>& f, double lo,
                            double hi, int scan_points, double tol,
                            int max_iter) {
  if (!(hi >= lo)) throw std::invalid_argument("scan_maximize: hi < lo");
  if (hi == lo) return {lo, f(lo), 0};
  if (scan_points < 3) scan_points = 3;
  const double span = hi - lo;
  int best = 0;
  double best_val = f(lo);
  for (int i = 1; i < scan_points; ++i) {
    const double x = lo + span * static_cast<double>(i) /
                              static_cast<double>(scan_points - 1);
    const double v = f(x);
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }
  const auto cell = [&](int i) {
    return lo + span * static_cast<double>(i) /
                    static_cast<double>(scan_points - 1);
  };
  const double blo = cell(best > 0 ? best - 1 : 0);
  const double bhi = cell(best < scan_points - 1 ? best + 1 : scan_points - 1);
  ScalarMaximum m = brent_maximize(f, blo, bhi, tol, max_iter);
  // The scan's own best sample wins if refinement landed lower (can happen
  // when the bracket holds a boundary maximum).
  if (best_val > m.value) {
    m.arg = cell(best);
    m.value = best_val;
  }
  return m;
}

double bisect_root(const std::function<double(double)>& f, double lo,
                   double hi, double f_tol, double x_tol, int max_iter) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw std::invalid_argument("bisect_root: endpoints do not bracket a root");
  }
  double mid = 0.5 * (lo + hi);
  for (int i = 0; i < max_iter; ++i) {
    mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (std::fabs(fm) < f_tol) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
    if (hi - lo < x_tol) return 0.5 * (lo + hi);
  }
  return mid;
}

}  // namespace armsrace
