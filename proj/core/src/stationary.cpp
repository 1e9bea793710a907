#include "burgers/stationary.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "burgers/spectrum.hpp"

namespace burgers {

namespace {

constexpr double kPi = std::numbers::pi;

// cot(k s), switching to the Laurent expansion about the nearest pole when
// k l is tiny (near the (a)/(b)/(c) separatrix the direct form is a 0/0
// limit in k). cot is pi/k periodic, so reduce first.
double cot_term(double k, double s, double l) {
  const double arg = k * s;
  if (k * l < 1e-4) {
    const double m = std::round(arg / kPi);
    const double red = arg - m * kPi;
    if (std::fabs(red) < 1e-3) {
      const double sigma = red / k;
      return (1.0 / sigma - k * k * sigma / 3.0 - std::pow(k, 4) * sigma * sigma * sigma / 45.0) /
             k;
    }
  }
  return std::cos(arg) / std::sin(arg);
}

// coth(k s) with the matching small-argument expansion (no reduction: the
// hyperbolic branch has a single pole).
double coth_term(double k, double s, double l) {
  const double arg = k * s;
  if (k * l < 1e-4 && std::fabs(arg) < 1e-3) {
    const double sigma = s;
    return (1.0 / sigma + k * k * sigma / 3.0 - std::pow(k, 4) * sigma * sigma * sigma / 45.0) / k;
  }
  return std::cosh(arg) / std::sinh(arg);
}

}  // namespace

StationaryProfile solve_stationary(const ProblemSpec& spec) {
  const CaseLabel label = classify(spec);
  switch (label) {
    case CaseLabel::Constant: {
      const double k0 = std::fabs(spec.A) / (2.0 * spec.nu);
      return {label, k0, 0.0, -spec.A * spec.A};
    }
    case CaseLabel::Rational:
      // u = -2 nu / (x - x0) with u(0) = A; H = 0 makes u(l) = B consistent
      return {label, 0.0, 2.0 * spec.nu / spec.A, 0.0};
    default: {
      const auto entries = spectrum(spec, 2);
      const SpectrumEntry& ground = entries.front();
      const bool branch_ok =
          (label == CaseLabel::TrigCot && ground.branch == Branch::Trig) ||
          (label == CaseLabel::HyperCoth && ground.branch == Branch::Hyperbolic &&
           ground.form == HyperbolicForm::Sinh) ||
          (label == CaseLabel::HyperTanh && ground.branch == Branch::Hyperbolic &&
           ground.form == HyperbolicForm::Cosh);
      if (!branch_ok) {
        std::ostringstream msg;
        msg << "solve_stationary: ground state branch does not match case ("
            << case_letter(label) << ")";
        throw NumericalError(msg.str());
      }
      const double k0 = ground.xi / spec.l;
      return {label, k0, ground.phase, 4.0 * spec.nu * spec.nu * ground.lambda};
    }
  }
}

double eval_stationary(const StationaryProfile& profile, const ProblemSpec& spec, double x) {
  return stationary_derivatives(profile, spec, x).u;
}

StationaryDerivatives stationary_derivatives(const StationaryProfile& profile,
                                             const ProblemSpec& spec, double x) {
  if (!(x >= 0.0 && x <= spec.l))
    throw ValidationError("eval_stationary: x outside [0,l]");
  const double nu = spec.nu;
  const double k = profile.k0;
  const double s = x - profile.x0;
  switch (profile.label) {
    case CaseLabel::Constant:
      return {spec.A, 0.0, 0.0};
    case CaseLabel::Rational:
      return {-2.0 * nu / s, 2.0 * nu / (s * s), -4.0 * nu / (s * s * s)};
    case CaseLabel::TrigCot: {
      const double c = cot_term(k, s, spec.l);
      // u' = 2 nu k^2 csc^2 = 2 nu k^2 (1 + c^2)
      return {-2.0 * nu * k * c, 2.0 * nu * k * k * (1.0 + c * c),
              -4.0 * nu * k * k * k * c * (1.0 + c * c)};
    }
    case CaseLabel::HyperCoth: {
      const double c = coth_term(k, s, spec.l);
      // u' = 2 nu k^2 csch^2 = 2 nu k^2 (c^2 - 1)
      return {-2.0 * nu * k * c, 2.0 * nu * k * k * (c * c - 1.0),
              -4.0 * nu * k * k * k * c * (c * c - 1.0)};
    }
    case CaseLabel::HyperTanh: {
      const double th = std::tanh(k * s);
      return {-2.0 * nu * k * th, -2.0 * nu * k * k * (1.0 - th * th),
              4.0 * nu * k * k * k * th * (1.0 - th * th)};
    }
  }
  return {0.0, 0.0, 0.0};
}

ResidualReport stationary_residual(const StationaryProfile& profile, const ProblemSpec& spec,
                                   std::span<const double> grid) {
  ResidualReport report{0.0, 0.0};
  for (double x : grid) {
    const auto d = stationary_derivatives(profile, spec, x);
    report.max_flux_residual =
        std::max(report.max_flux_residual,
                 std::fabs(2.0 * spec.nu * d.ux - d.u * d.u - profile.c0));
    report.max_ode_residual =
        std::max(report.max_ode_residual, std::fabs(d.u * d.ux - spec.nu * d.uxx));
  }
  return report;
}

}  // namespace burgers
