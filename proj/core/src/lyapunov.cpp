#include "burgers/lyapunov.hpp"

#include <cmath>
#include <sstream>

#include "burgers/stationary.hpp"

namespace burgers {

LyapunovSpectrum lyapunov_exponents(const ProblemSpec& spec, std::size_t count) {
  if (count < 1) throw ValidationError("lyapunov_exponents: count must be >= 1");
  LyapunovSpectrum result;
  result.entries = spectrum(spec, count + 1);
  result.mu.reserve(count);
  const double lambda0 = result.entries.front().lambda;
  for (std::size_t i = 1; i <= count; ++i)
    result.mu.push_back(-spec.nu * (result.entries[i].lambda - lambda0));
  return result;
}

namespace {

ModalSolution build_modal(const ProblemSpec& spec, std::size_t mode_index, double c_ground,
                          double alpha) {
  if (mode_index < 1)
    throw ValidationError("make_modal_solution: mode index must be >= 1");
  if (c_ground == 0.0)
    throw ValidationError("make_modal_solution: ground amplitude must be nonzero");
  auto entries = spectrum(spec, mode_index + 1);
  ModalSolution m{spec, entries.front(), entries[mode_index], c_ground, alpha};
  // |alpha| max|X_i| < |c| min|X_0| keeps the log argument away from zero
  // for every x and every t >= 0 (max|X_i| = 1 by normalization)
  const double floor = ground_min_abs(m.ground, spec);
  if (!(std::fabs(alpha) < floor * std::fabs(c_ground))) {
    std::ostringstream msg;
    msg << "make_modal_solution: |alpha|=" << std::fabs(alpha)
        << " violates the positivity bound " << floor * std::fabs(c_ground)
        << " (= min|X_0| |c| / max|X_" << mode_index << "|)";
    throw ValidationError(msg.str());
  }
  return m;
}

}  // namespace

ModalSolution make_modal_solution(const ProblemSpec& spec, std::size_t mode_index,
                                  double alpha_fraction) {
  if (!(alpha_fraction > 0.0) || !(alpha_fraction < 1.0))
    throw ValidationError("make_modal_solution: alpha_fraction must lie in (0,1)");
  auto entries = spectrum(spec, mode_index < 1 ? 2 : mode_index + 1);
  const double floor = ground_min_abs(entries.front(), spec);
  return build_modal(spec, mode_index, 1.0, alpha_fraction * floor);
}

ModalSolution make_modal_solution(const ProblemSpec& spec, std::size_t mode_index,
                                  double c_ground, double alpha) {
  return build_modal(spec, mode_index, c_ground, alpha);
}

double modal_mu(const ModalSolution& m) noexcept {
  return -m.spec.nu * (m.mode.lambda - m.ground.lambda);
}

double eval_modal_solution(const ModalSolution& m, double x, double t) {
  if (!(t >= 0.0)) throw ValidationError("eval_modal_solution: t must be >= 0");
  const double decay = std::exp(-m.spec.nu * (m.mode.lambda - m.ground.lambda) * t);
  const double den = m.c_ground * eval_eigenfunction(m.ground, m.spec, x) +
                     m.alpha * decay * eval_eigenfunction(m.mode, m.spec, x);
  if (std::fabs(den) < 1e-14 * (std::fabs(m.c_ground) + std::fabs(m.alpha)))
    throw NumericalError("eval_modal_solution: denominator vanished; construction bound violated");
  const double num = m.c_ground * eval_eigenfunction_derivative(m.ground, m.spec, x) +
                     m.alpha * decay * eval_eigenfunction_derivative(m.mode, m.spec, x);
  return -2.0 * m.spec.nu * num / den;
}

std::vector<std::pair<double, double>> modal_decay_curve(const ModalSolution& m,
                                                         std::span<const double> times) {
  constexpr int kGridPoints = 1025;
  const StationaryProfile profile = solve_stationary(m.spec);
  std::vector<std::pair<double, double>> curve;
  curve.reserve(times.size());
  double prev = 0.0;
  bool first = true;
  for (double t : times) {
    if (!(t >= 0.0) || (!first && t < prev))
      throw ValidationError("modal_decay_curve: times must be nondecreasing and >= 0");
    prev = t;
    first = false;
    double dist = 0.0;
    for (int j = 0; j < kGridPoints; ++j) {
      const double x = m.spec.l * static_cast<double>(j) / (kGridPoints - 1);
      dist = std::max(dist,
                      std::fabs(eval_modal_solution(m, x, t) - eval_stationary(profile, m.spec, x)));
    }
    curve.emplace_back(t, dist);
  }
  return curve;
}

std::vector<double> cole_hopf_numeric(std::span<const double> phi_samples, double h, double nu) {
  const std::size_t n = phi_samples.size();
  if (n < 3) throw ValidationError("cole_hopf_numeric: need at least 3 samples");
  if (!(h > 0.0)) throw ValidationError("cole_hopf_numeric: spacing must be positive");
  const bool negative = phi_samples.front() < 0.0;
  std::vector<double> logphi(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double v = phi_samples[j];
    if (v == 0.0 || (v < 0.0) != negative)
      throw NumericalError(
          "cole_hopf_numeric: phi changes sign; zeros of phi map to discontinuities of u");
    logphi[j] = std::log(std::fabs(v));
  }
  std::vector<double> u(n);
  u.front() = -2.0 * nu * (-3.0 * logphi[0] + 4.0 * logphi[1] - logphi[2]) / (2.0 * h);
  for (std::size_t j = 1; j + 1 < n; ++j)
    u[j] = -2.0 * nu * (logphi[j + 1] - logphi[j - 1]) / (2.0 * h);
  u.back() = -2.0 * nu * (3.0 * logphi[n - 1] - 4.0 * logphi[n - 2] + logphi[n - 3]) / (2.0 * h);
  return u;
}

}  // namespace burgers
