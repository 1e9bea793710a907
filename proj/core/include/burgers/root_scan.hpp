#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "burgers/errors.hpp"

namespace burgers {

/// Refine a bracketed sign change of f to a root: bisection down to
/// ~1e-13 relative interval width, then one safeguarded Newton step
/// using the analytic derivative df. Requires f(lo) * f(hi) <= 0.
template <class Fn, class Dfn>
double refine_root(Fn&& f, Dfn&& df, double lo, double hi) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (std::signbit(flo) == std::signbit(fhi))
    throw BracketingError("refine_root: interval does not bracket a sign change");

  for (int it = 0; it < 220; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double tol = 1e-13 * std::max(std::fabs(mid), 1e-12);
    if (hi - lo <= tol) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }

  const double x = 0.5 * (lo + hi);
  const double fx = f(x);
  const double d = df(x);
  if (d != 0.0 && std::isfinite(d)) {
    const double xn = x - fx / d;
    if (xn > lo && xn < hi && std::fabs(f(xn)) <= std::fabs(fx)) return xn;
  }
  return x;
}

namespace detail {

// Golden-section minimum of sign*f over [a,b]; returns (argmin, f(argmin)).
template <class Fn>
std::pair<double, double> minimize_signed(Fn&& f, double sign, double a, double b) {
  constexpr double gr = 0.6180339887498949;
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  double fc = sign * f(c);
  double fd = sign * f(d);
  for (int it = 0; it < 200 && (b - a) > 1e-13 * (1.0 + std::fabs(a) + std::fabs(b)); ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = sign * f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = sign * f(d);
    }
  }
  const double m = 0.5 * (a + b);
  return {m, f(m)};
}

}  // namespace detail

/// Locate ascending roots of f on (lo, hi] by a fixed-step sign-change scan.
/// Sampled local extrema that sit on the wrong side of zero are re-minimized
/// (golden section) so near-tangent root pairs closer than `step` are still
/// recovered. Stops after max_roots. Roots closer than 1e-9*(1+|r|) to a
/// previously found one are treated as duplicates.
template <class Fn, class Dfn>
std::vector<double> scan_roots(Fn&& f, Dfn&& df, double lo, double hi, double step,
                               std::size_t max_roots) {
  std::vector<double> roots;
  if (!(hi > lo) || !(step > 0.0) || max_roots == 0) return roots;

  auto push = [&roots](double r) {
    if (roots.empty() || r - roots.back() > 1e-9 * (1.0 + std::fabs(r))) roots.push_back(r);
  };

  double x1 = 0.0, f1 = 0.0;  // sample before previous
  bool have1 = false;
  double x0 = lo;
  double f0 = f(lo);
  if (f0 == 0.0) push(lo);

  bool done = false;
  for (double x = lo + step; !done && roots.size() < max_roots; x += step) {
    if (x >= hi) {
      x = hi;
      done = true;
    }
    const double fx = f(x);
    if (fx == 0.0) {
      push(x);
    } else if (f0 != 0.0 && std::signbit(f0) != std::signbit(fx)) {
      push(refine_root(f, df, x0, x));
    } else if (have1 && f1 != 0.0 && f0 != 0.0 && std::signbit(f1) == std::signbit(f0) &&
               std::signbit(f0) == std::signbit(fx) && std::fabs(f0) < std::fabs(f1) &&
               std::fabs(f0) < std::fabs(fx)) {
      // dip toward zero between samples: check whether it actually crosses
      const double side = std::signbit(f0) ? -1.0 : 1.0;
      const auto [xm, fm] = detail::minimize_signed(f, side, x1, x);
      if (fm != 0.0 && std::signbit(fm) != std::signbit(f0)) {
        push(refine_root(f, df, x1, xm));
        push(refine_root(f, df, xm, x));
      } else if (fm == 0.0) {
        push(xm);
      }
    }
    x1 = x0;
    f1 = f0;
    have1 = true;
    x0 = x;
    f0 = fx;
  }
  return roots;
}

}  // namespace burgers
