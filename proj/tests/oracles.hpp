// Test-side oracles, deliberately independent of the library's root finder
// and fit routines: plain bisection, a fixed-step sign scan, and the
// closed-form least-squares slope. Expected values frozen in the tests were
// produced with these.
#pragma once

#include <cmath>
#include <functional>
#include <utility>
#include <vector>

namespace oracle {

inline double bisect(const std::function<double(double)>& f, double a, double b) {
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  REQUIRE(fa * fb < 0.0);
  for (int i = 0; i < 220; ++i) {
    const double m = 0.5 * (a + b), fm = f(m);
    if (fm == 0.0) return m;
    if (fa * fm < 0.0) {
      b = m;
      fb = fm;
    } else {
      a = m;
      fa = fm;
    }
  }
  return 0.5 * (a + b);
}

inline std::vector<double> scan(const std::function<double(double)>& f, double a, double b,
                                double step) {
  std::vector<double> roots;
  double x0 = a, f0 = f(a);
  for (double x = a + step; x <= b + 1e-12; x += step) {
    const double fx = f(x);
    if (f0 != 0.0 && fx != 0.0 && f0 * fx < 0.0) roots.push_back(bisect(f, x0, x));
    x0 = x;
    f0 = fx;
  }
  return roots;
}

inline double lsq_slope(const std::vector<std::pair<double, double>>& t_logd) {
  double st = 0, sy = 0, stt = 0, sty = 0;
  const double n = static_cast<double>(t_logd.size());
  for (const auto& [t, y] : t_logd) {
    st += t;
    sy += y;
    stt += t * t;
    sty += t * y;
  }
  return (n * sty - st * sy) / (n * stt - st * st);
}

inline std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = a + (b - a) * i / (n - 1);
  return xs;
}

}  // namespace oracle
