#include "burgers/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "burgers/root_scan.hpp"

namespace burgers {

namespace {

constexpr double kPi = std::numbers::pi;

// arccot valued in (0, pi); cot(arccot(y)) == y for all real y.
double arccot(double y) { return std::atan2(1.0, y); }

double trig_root_tolerance(const RobinCoefficients& pq, double xi) {
  return 1e-12 * (1.0 + std::fabs(pq.p) + std::fabs(pq.q) * xi * xi);
}

double hyperbolic_root_tolerance(const RobinCoefficients& pq, double xi) {
  return 1e-12 * (1.0 + std::fabs(pq.p) + std::fabs(pq.q) * xi * xi + xi);
}

}  // namespace

RobinCoefficients build_pq(const ProblemSpec& spec) {
  if (spec.A == spec.B)
    throw ValidationError("build_pq: p, q are undefined for A == B (use the closed-form path)");
  const double diff = spec.B - spec.A;
  return {spec.l * spec.A * spec.B / (2.0 * spec.nu * diff), 2.0 * spec.nu / (spec.l * diff)};
}

double trig_characteristic(const RobinCoefficients& pq, double xi) noexcept {
  return xi * std::cos(xi) - (pq.p + pq.q * xi * xi) * std::sin(xi);
}

double trig_characteristic_derivative(const RobinCoefficients& pq, double xi) noexcept {
  return (1.0 - pq.p - pq.q * xi * xi) * std::cos(xi) - (1.0 + 2.0 * pq.q) * xi * std::sin(xi);
}

double hyperbolic_characteristic(const RobinCoefficients& pq, double xi) noexcept {
  const double e = std::exp(-2.0 * xi);
  return xi * (1.0 + e) - (pq.p - pq.q * xi * xi) * (1.0 - e);
}

double hyperbolic_characteristic_derivative(const RobinCoefficients& pq, double xi) noexcept {
  const double e = std::exp(-2.0 * xi);
  return 1.0 + e - 2.0 * xi * e + 2.0 * pq.q * xi * (1.0 - e) -
         2.0 * (pq.p - pq.q * xi * xi) * e;
}

std::vector<double> trig_roots(const RobinCoefficients& pq, std::size_t count) {
  if (count < 1) throw ValidationError("trig_roots: count must be >= 1");
  const double step = kPi / 64.0;
  const double start = 1e-8;  // xi = 0 solves g identically; the genuine
                              // lambda = 0 eigenvalue is the zero branch
  auto g = [&pq](double xi) { return trig_characteristic(pq, xi); };
  auto dg = [&pq](double xi) { return trig_characteristic_derivative(pq, xi); };

  double hi = static_cast<double>(count + 2) * kPi;
  const double hard_cap = static_cast<double>(count + 12) * kPi;
  std::vector<double> roots = scan_roots(g, dg, start, hi, step, count);
  while (roots.size() < count && hi < hard_cap) {
    hi = std::min(hi + 2.0 * kPi, hard_cap);
    roots = scan_roots(g, dg, start, hi, step, count);
  }
  if (roots.size() < count) {
    std::ostringstream msg;
    msg << "trig_roots: scanned (" << start << ", " << hi << "] with step pi/64 and found only "
        << roots.size() << " of " << count << " roots (p=" << pq.p << ", q=" << pq.q
        << ", g(hi)=" << g(hi) << ")";
    throw BracketingError(msg.str());
  }
  roots.resize(count);
  for (double r : roots) {
    if (std::fabs(g(r)) > trig_root_tolerance(pq, r)) {
      std::ostringstream msg;
      msg << "trig_roots: residual " << std::fabs(g(r)) << " at xi=" << r
          << " exceeds tolerance " << trig_root_tolerance(pq, r);
      throw NumericalError(msg.str());
    }
  }
  return roots;
}

std::vector<double> hyperbolic_roots(const RobinCoefficients& pq) {
  // Roots obey |q| xi^2 - xi coth(xi) +- ... <= 0; with xi <= xi coth(xi)
  // <= xi + 1 this yields a hard quadratic ceiling on where they can live.
  double ceiling = 4.0;
  if (pq.q > 0.0) {
    if (pq.p > 1.0)
      ceiling = (-1.0 + std::sqrt(1.0 + 4.0 * pq.q * pq.p)) / (2.0 * pq.q) + 10.0;
  } else if (pq.q < 0.0) {
    const double aq = -pq.q;
    const double disc = 1.0 - 4.0 * aq * (pq.p - 1.0);
    if (disc >= 0.0) ceiling = (1.0 + std::sqrt(disc)) / (2.0 * aq) + 10.0;
  }

  auto h = [&pq](double xi) { return hyperbolic_characteristic(pq, xi); };
  auto dh = [&pq](double xi) { return hyperbolic_characteristic_derivative(pq, xi); };
  std::vector<double> roots = scan_roots(h, dh, 1e-8, ceiling, 1.0 / 64.0, 8);

  if (pq.q < 0.0 && pq.p > 1.0 && roots.size() < 2) {
    // two-root regime (A > 0 > B with strong data): the pair straddles the
    // vertex of q xi^2 + xi - p and is split only by coth(xi) - 1 ~ e^{-2 xi}.
    // Once that split drops below arithmetic noise the roots cannot be told
    // apart in double precision; fail with a diagnostic instead of
    // returning noise.
    const double vertex = -0.5 / pq.q;
    if (vertex > 1.0 && vertex < ceiling) {
      const double tail = std::fabs(hyperbolic_characteristic(pq, vertex));
      const double noise =
          64.0 * 2.2e-16 * (vertex + std::fabs(pq.p) + std::fabs(pq.q) * vertex * vertex);
      if (tail <= noise) {
        std::ostringstream msg;
        msg << "hyperbolic_roots: the two lowest eigenvalues coincide to double precision "
               "near xi="
            << vertex << " (characteristic " << tail << " vs noise scale " << noise
            << "); the spectral gap of this boundary data is not resolvable";
        throw NumericalError(msg.str());
      }
    }
  }

  if (roots.size() > 2) {
    std::ostringstream msg;
    msg << "hyperbolic_roots: found " << roots.size()
        << " roots, but at most two eigenvalues can be negative (p=" << pq.p << ", q=" << pq.q
        << ")";
    throw NumericalError(msg.str());
  }
  for (double r : roots) {
    if (std::fabs(h(r)) > hyperbolic_root_tolerance(pq, r)) {
      std::ostringstream msg;
      msg << "hyperbolic_roots: residual " << std::fabs(h(r)) << " at xi=" << r
          << " exceeds tolerance " << hyperbolic_root_tolerance(pq, r);
      throw NumericalError(msg.str());
    }
  }
  return roots;
}

namespace {

double raw_value(const SpectrumEntry& e, const ProblemSpec& s, double x) {
  const double k = e.xi / s.l;
  switch (e.branch) {
    case Branch::Trig:
      return std::sin(k * (x - e.phase));
    case Branch::Hyperbolic: {
      const double a = k * (x - e.phase);
      return e.form == HyperbolicForm::Cosh ? std::cosh(a) : std::sinh(a);
    }
    case Branch::Zero:
      return x - e.phase;
    case Branch::ClosedForm:
      if (e.index == 0) return std::exp(-(s.A / (2.0 * s.nu)) * x);
      return std::sin(k * (x - e.phase));
  }
  return 0.0;
}

double raw_derivative(const SpectrumEntry& e, const ProblemSpec& s, double x) {
  const double k = e.xi / s.l;
  switch (e.branch) {
    case Branch::Trig:
      return k * std::cos(k * (x - e.phase));
    case Branch::Hyperbolic: {
      const double a = k * (x - e.phase);
      return e.form == HyperbolicForm::Cosh ? k * std::sinh(a) : k * std::cosh(a);
    }
    case Branch::Zero:
      return 1.0;
    case Branch::ClosedForm: {
      if (e.index == 0) {
        const double rate = s.A / (2.0 * s.nu);
        return -rate * std::exp(-rate * x);
      }
      return k * std::cos(k * (x - e.phase));
    }
  }
  return 0.0;
}

bool sine_extremum_inside(double lo, double hi) {
  const double mlo = std::ceil((lo - 0.5 * kPi) / kPi);
  const double mhi = std::floor((hi - 0.5 * kPi) / kPi);
  return mlo <= mhi;
}

double raw_max_abs(const SpectrumEntry& e, const ProblemSpec& s) {
  const double k = e.xi / s.l;
  const double lo = k * (0.0 - e.phase);
  const double hi = k * (s.l - e.phase);
  switch (e.branch) {
    case Branch::Trig:
      return sine_extremum_inside(lo, hi)
                 ? 1.0
                 : std::max(std::fabs(std::sin(lo)), std::fabs(std::sin(hi)));
    case Branch::Hyperbolic:
      if (e.form == HyperbolicForm::Cosh) return std::max(std::cosh(lo), std::cosh(hi));
      return std::max(std::fabs(std::sinh(lo)), std::fabs(std::sinh(hi)));
    case Branch::Zero:
      return std::max(std::fabs(e.phase), std::fabs(s.l - e.phase));
    case Branch::ClosedForm:
      if (e.index == 0) return std::max(1.0, std::exp(-(s.A / (2.0 * s.nu)) * s.l));
      return sine_extremum_inside(lo, hi)
                 ? 1.0
                 : std::max(std::fabs(std::sin(lo)), std::fabs(std::sin(hi)));
  }
  return 1.0;
}

void set_amplitude(SpectrumEntry& e, const ProblemSpec& s) {
  const double at_left = raw_value(e, s, 0.0);
  const double at_right = raw_value(e, s, s.l);
  const double scale = raw_max_abs(e, s);
  // Robin data admit no boundary zeros, so a vanishing or non-finite
  // endpoint value means the eigenfunction's range over- or underflowed
  if (at_left == 0.0 || at_right == 0.0 || !std::isfinite(scale)) {
    std::ostringstream msg;
    msg << "spectrum: eigenfunction dynamic range exceeds double precision at xi=" << e.xi
        << " (endpoint values " << at_left << ", " << at_right << ")";
    throw NumericalError(msg.str());
  }
  e.amplitude = at_left > 0.0 ? scale : -scale;
}

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

}  // namespace

double eval_eigenfunction(const SpectrumEntry& entry, const ProblemSpec& spec, double x) {
  if (!(x >= 0.0 && x <= spec.l))
    throw ValidationError("eval_eigenfunction: x outside [0,l]");
  return raw_value(entry, spec, x) / entry.amplitude;
}

double eval_eigenfunction_derivative(const SpectrumEntry& entry, const ProblemSpec& spec,
                                     double x) {
  if (!(x >= 0.0 && x <= spec.l))
    throw ValidationError("eval_eigenfunction_derivative: x outside [0,l]");
  return raw_derivative(entry, spec, x) / entry.amplitude;
}

int count_interior_zeros(const SpectrumEntry& entry, const ProblemSpec& spec,
                         std::size_t scan_resolution) {
  if (scan_resolution < 64)
    throw ValidationError("count_interior_zeros: need at least 64 points per unit xi");
  const double units = std::max(1.0, entry.xi);
  const std::size_t n =
      std::max<std::size_t>(256, static_cast<std::size_t>(std::ceil(scan_resolution * units)));
  const double h = spec.l / static_cast<double>(n);

  std::vector<double> vals(n + 1);
  for (std::size_t j = 0; j <= n; ++j)
    vals[j] = raw_value(entry, spec, std::min(spec.l, j * h));
  if (vals.front() == 0.0 || vals.back() == 0.0)
    throw CertificationError("count_interior_zeros: eigenfunction vanishes at an endpoint");

  auto f = [&](double x) { return raw_value(entry, spec, x); };
  auto df = [&](double x) { return raw_derivative(entry, spec, x); };

  int count = 0;
  int last_sign = sign_of(vals[0]);
  std::size_t last_idx = 0;
  for (std::size_t j = 1; j <= n; ++j) {
    const int s = sign_of(vals[j]);
    if (s == 0) continue;  // decide once the sign reappears
    if (s != last_sign) {
      const double z = refine_root(f, df, last_idx * h, std::min(spec.l, j * h));
      if (!(z > 0.0 && z < spec.l))
        throw CertificationError("count_interior_zeros: refined zero left the open interval");
      ++count;
    } else if (j - last_idx > 1) {
      // skipped exact-zero nodes without a sign change: a tangential zero,
      // impossible for simple Sturm-Liouville eigenvalues
      throw CertificationError("count_interior_zeros: tangential zero detected");
    }
    last_sign = s;
    last_idx = j;
  }
  return count;
}

double ground_min_abs(const SpectrumEntry& entry, const ProblemSpec& spec) {
  if (entry.index != 0)
    throw ValidationError("ground_min_abs: entry is not a ground state");
  const double k = entry.xi / spec.l;
  const double lo = k * (0.0 - entry.phase);
  const double hi = k * (spec.l - entry.phase);
  double raw_min = 0.0;
  switch (entry.branch) {
    case Branch::Trig:
      // single zero-free lobe: |sin| is concave there, minimum at an endpoint
      raw_min = std::min(std::fabs(std::sin(lo)), std::fabs(std::sin(hi)));
      break;
    case Branch::Hyperbolic:
      if (entry.form == HyperbolicForm::Cosh)
        raw_min = (lo <= 0.0 && hi >= 0.0) ? 1.0 : std::min(std::cosh(lo), std::cosh(hi));
      else
        raw_min = std::min(std::fabs(std::sinh(lo)), std::fabs(std::sinh(hi)));
      break;
    case Branch::Zero:
      raw_min = std::min(std::fabs(entry.phase), std::fabs(spec.l - entry.phase));
      break;
    case Branch::ClosedForm:
      raw_min = std::min(1.0, std::exp(-(spec.A / (2.0 * spec.nu)) * spec.l));
      break;
  }
  return raw_min / std::fabs(entry.amplitude);
}

namespace {

SpectrumEntry make_trig_entry(const ProblemSpec& s, double xi) {
  const double k = xi / s.l;
  SpectrumEntry e;
  e.branch = Branch::Trig;
  e.xi = xi;
  e.lambda = k * k;
  e.phase = arccot(s.A / (2.0 * s.nu * k)) / k;
  return e;
}

SpectrumEntry make_hyperbolic_entry(const ProblemSpec& s, double xi) {
  const double k = xi / s.l;
  SpectrumEntry e;
  e.branch = Branch::Hyperbolic;
  e.xi = xi;
  e.lambda = -k * k;

  // tanh/arcoth arguments at the two ends; both drift toward +-1
  // exponentially in the distance from the shock center, so take form and
  // phase from whichever end carries more information (larger ||r|-1|).
  // Using the wrong end loses the center position and with it the far
  // boundary value.
  const double r_left = s.A / (2.0 * s.nu * k);
  const double r_right = -s.B / (2.0 * s.nu * k);
  const double info_left = std::fabs(std::fabs(r_left) - 1.0);
  const double info_right = std::fabs(std::fabs(r_right) - 1.0);
  const bool use_left = info_left >= info_right;
  const double r = use_left ? r_left : r_right;

  if (std::max(info_left, info_right) < 1e-13) {
    std::ostringstream msg;
    msg << "spectrum: |A| and |B| both equal 2 nu k to machine precision at xi=" << xi
        << "; the eigenfunction's center position is not resolvable in double precision";
    throw NumericalError(msg.str());
  }

  double offset;  // distance of the center from the used end
  if (std::fabs(r) < 1.0) {
    e.form = HyperbolicForm::Cosh;
    offset = std::atanh(r) / k;
  } else {
    e.form = HyperbolicForm::Sinh;
    offset = std::atanh(1.0 / r) / k;  // arcoth(r)
  }
  e.phase = use_left ? offset : s.l - offset;
  return e;
}

}  // namespace

std::vector<SpectrumEntry> spectrum(const ProblemSpec& spec, std::size_t count) {
  if (count < 2) throw ValidationError("spectrum: count must be >= 2");
  std::vector<SpectrumEntry> entries;
  entries.reserve(count);

  if (spec.A == spec.B) {
    const double k0 = std::fabs(spec.A) / (2.0 * spec.nu);
    SpectrumEntry ground;
    ground.branch = Branch::ClosedForm;
    ground.xi = k0 * spec.l;
    ground.lambda = -k0 * k0;
    entries.push_back(ground);
    for (std::size_t i = 1; i < count; ++i) {
      const double k = kPi * static_cast<double>(i) / spec.l;
      SpectrumEntry e;
      e.branch = Branch::ClosedForm;
      e.xi = kPi * static_cast<double>(i);
      e.lambda = k * k;
      e.phase = arccot(spec.A / (2.0 * spec.nu * k)) / k;
      e.index = i;  // raw_value dispatches on it
      entries.push_back(e);
    }
  } else {
    const RobinCoefficients pq = build_pq(spec);
    std::vector<double> hyper = hyperbolic_roots(pq);
    std::vector<double> trig = trig_roots(pq, count);
    const bool zero_branch = h_is_zero(spec);
    if (zero_branch) {
      // a root below 1e-4 is the lambda = 0 eigenvalue seen from a
      // perturbed side of the separatrix; the zero branch represents it
      std::erase_if(hyper, [](double xi) { return xi < 1e-4; });
      std::erase_if(trig, [](double xi) { return xi < 1e-4; });
    }
    for (auto it = hyper.rbegin(); it != hyper.rend(); ++it)
      entries.push_back(make_hyperbolic_entry(spec, *it));
    if (zero_branch) {
      SpectrumEntry e;
      e.branch = Branch::Zero;
      e.phase = 2.0 * spec.nu / spec.A;
      entries.push_back(e);
    }
    for (double xi : trig) {
      if (entries.size() >= count) break;
      entries.push_back(make_trig_entry(spec, xi));
    }
    entries.resize(std::min(entries.size(), count));
  }

  for (std::size_t i = 0; i < entries.size(); ++i) {
    entries[i].index = i;
    if (i > 0 && !(entries[i].lambda > entries[i - 1].lambda)) {
      std::ostringstream msg;
      msg << "spectrum: eigenvalues not strictly increasing at index " << i << " ("
          << entries[i - 1].lambda << " -> " << entries[i].lambda << ")";
      throw NumericalError(msg.str());
    }
    set_amplitude(entries[i], spec);
    const int zeros = count_interior_zeros(entries[i], spec, 64);
    if (zeros != static_cast<int>(i)) {
      std::ostringstream msg;
      msg << "spectrum: oscillation certification failed: entry " << i << " (branch "
          << static_cast<int>(entries[i].branch) << ", xi=" << entries[i].xi << ", lambda="
          << entries[i].lambda << ") has " << zeros << " interior zeros";
      throw CertificationError(msg.str());
    }
    entries[i].zero_count = zeros;
  }
  return entries;
}

}  // namespace burgers
