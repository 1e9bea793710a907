#include "burgers/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace burgers {

namespace {

double max_abs(std::span<const double> values) {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::fabs(v));
  return m;
}

void check_cells(int n_cells) {
  if (n_cells < 16) throw ValidationError("GridField: need at least 16 cells");
}

void check_boundary(const GridField& field, const ProblemSpec& spec) {
  const double tol = 1e-9 * (1.0 + std::fabs(spec.A) + std::fabs(spec.B));
  if (std::fabs(field.values.front() - spec.A) > tol ||
      std::fabs(field.values.back() - spec.B) > tol)
    throw ValidationError("initial data do not satisfy the boundary values");
}

}  // namespace

GridField make_field(const ProblemSpec& spec, int n_cells) {
  check_cells(n_cells);
  GridField f;
  f.n_cells = n_cells;
  f.h = spec.l / n_cells;
  f.values.assign(static_cast<std::size_t>(n_cells) + 1, 0.0);
  f.values.front() = spec.A;
  f.values.back() = spec.B;
  return f;
}

GridField sample_stationary_field(const StationaryProfile& profile, const ProblemSpec& spec,
                                  int n_cells) {
  GridField f = make_field(spec, n_cells);
  for (int j = 1; j < n_cells; ++j)
    f.values[j] = eval_stationary(profile, spec, j * f.h);
  return f;
}

GridField perturbed_stationary_field(const StationaryProfile& profile, const ProblemSpec& spec,
                                     int n_cells, double eps) {
  GridField f = sample_stationary_field(profile, spec, n_cells);
  for (int j = 1; j < n_cells; ++j)
    f.values[j] += eps * std::sin(std::numbers::pi * j * f.h / spec.l);
  return f;
}

GridField sample_modal_field(const ModalSolution& m, int n_cells) {
  GridField f = make_field(m.spec, n_cells);
  for (int j = 1; j < n_cells; ++j)
    f.values[j] = eval_modal_solution(m, j * f.h, 0.0);
  // the modal formula reproduces A and B analytically; pin them bit-exactly
  return f;
}

double stable_dt(const GridField& field, const ProblemSpec& spec) {
  const double diffusive = field.h * field.h / (2.0 * spec.nu);
  const double advective = field.h / (max_abs(field.values) + 1e-12);
  return 0.9 * std::min(diffusive, advective);
}

void step(GridField& field, const ProblemSpec& spec, double dt) {
  if (!(dt > 0.0)) throw ValidationError("step: dt must be positive");
  const double bound =
      0.9 * std::min(field.h * field.h / (2.0 * spec.nu),
                     field.h / (max_abs(field.values) + 1e-12));
  if (dt > bound * (1.0 + 1e-12)) {
    std::ostringstream msg;
    msg << "step: dt=" << dt << " violates the stability bound " << bound;
    throw ValidationError(msg.str());
  }

  const int n = field.n_cells;
  const double h = field.h;
  const double* u = field.values.data();
  static thread_local std::vector<double> next;
  next.resize(field.values.size());
  const double inv4h = dt / (4.0 * h);
  const double diff = dt * spec.nu / (h * h);
  for (int j = 1; j < n; ++j) {
    const double flux = (u[j + 1] * u[j + 1] - u[j - 1] * u[j - 1]) * inv4h;
    next[j] = u[j] - flux + diff * (u[j + 1] - 2.0 * u[j] + u[j - 1]);
  }
  next.front() = spec.A;
  next.back() = spec.B;
  field.values.swap(next);
  field.time += dt;
}

std::vector<GridField> evolve(const ProblemSpec& spec, GridField initial, double t_end,
                              int sample_every_steps) {
  check_cells(initial.n_cells);
  check_boundary(initial, spec);
  if (!(t_end >= initial.time)) throw ValidationError("evolve: t_end before initial time");
  if (sample_every_steps < 1) throw ValidationError("evolve: sampling stride must be >= 1");
  initial.values.front() = spec.A;
  initial.values.back() = spec.B;

  const double blowup = 10.0 * std::max({max_abs(initial.values), std::fabs(spec.A),
                                         std::fabs(spec.B), 1e-30});
  std::vector<GridField> snapshots{initial};
  GridField field = std::move(initial);
  long step_count = 0;
  while (field.time < t_end) {
    const double dt = std::min(stable_dt(field, spec), t_end - field.time);
    step(field, spec, dt);
    ++step_count;
    if (max_abs(field.values) > blowup)
      throw NumericalError("evolve: scheme blow-up detected (max|u| exceeded 10x initial bound)");
    if (step_count % sample_every_steps == 0 || field.time >= t_end)
      snapshots.push_back(field);
  }
  return snapshots;
}

double distance_to_stationary(const GridField& field, const StationaryProfile& profile,
                              const ProblemSpec& spec) {
  double d = 0.0;
  for (int j = 0; j <= field.n_cells; ++j) {
    const double x = std::min(spec.l, j * field.h);
    d = std::max(d, std::fabs(field.values[j] - eval_stationary(profile, spec, x)));
  }
  return d;
}

GridField discrete_stationary(const ProblemSpec& spec, int n_cells) {
  const StationaryProfile profile = solve_stationary(spec);
  GridField f = sample_stationary_field(profile, spec, n_cells);
  const int n = n_cells;
  const double h = f.h;
  const double nu = spec.nu;

  // Newton on the interior residual R_j = nu (u_{j+1}-2u_j+u_{j-1})/h^2
  // - (u_{j+1}^2-u_{j-1}^2)/(4h); Jacobian is tridiagonal (Thomas solve).
  std::vector<double> lower(n - 1), diag(n - 1), upper(n - 1), rhs(n - 1);
  for (int iter = 0; iter < 50; ++iter) {
    const double* u = f.values.data();
    for (int j = 1; j < n; ++j) {
      const double res = nu * (u[j + 1] - 2.0 * u[j] + u[j - 1]) / (h * h) -
                         (u[j + 1] * u[j + 1] - u[j - 1] * u[j - 1]) / (4.0 * h);
      rhs[j - 1] = -res;
      lower[j - 1] = nu / (h * h) + u[j - 1] / (2.0 * h);
      diag[j - 1] = -2.0 * nu / (h * h);
      upper[j - 1] = nu / (h * h) - u[j + 1] / (2.0 * h);
    }
    // forward elimination
    for (int j = 1; j < n - 1; ++j) {
      const double w = lower[j] / diag[j - 1];
      diag[j] -= w * upper[j - 1];
      rhs[j] -= w * rhs[j - 1];
    }
    double max_delta = 0.0;
    double carry = 0.0;
    for (int j = n - 2; j >= 0; --j) {
      const double delta = (rhs[j] - (j + 1 < n - 1 ? upper[j] * carry : 0.0)) / diag[j];
      f.values[j + 1] += delta;
      max_delta = std::max(max_delta, std::fabs(delta));
      carry = delta;
    }
    if (max_delta < 1e-14 * (1.0 + max_abs(f.values))) return f;
  }
  throw NumericalError("discrete_stationary: Newton iteration did not converge");
}

FitResult fit_decay_rate(std::span<const std::pair<double, double>> samples, double hi_frac,
                         double lo_frac) {
  FitResult fit;
  if (samples.empty()) return fit;
  const double scale = samples.front().second;
  if (!(scale > 0.0)) return fit;
  fit.window_hi = hi_frac * scale;
  fit.window_lo = lo_frac * scale;
  const double floor = 1e-12 * scale;

  double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
  int n = 0;
  for (const auto& [t, d] : samples) {
    if (d < fit.window_lo || d > fit.window_hi || d <= floor) continue;
    const double y = std::log(d);
    st += t;
    sy += y;
    stt += t * t;
    sty += t * y;
    ++n;
  }
  fit.n_used = n;
  if (n >= 2) {
    const double denom = n * stt - st * st;
    if (denom != 0.0) fit.rate = (n * sty - st * sy) / denom;
  }
  fit.reliable = n >= 10;
  return fit;
}

DecayReport measure_decay(const ProblemSpec& spec, GridField initial,
                          const StationaryProfile& profile, double predicted_mu,
                          const DecayOptions& options) {
  check_cells(initial.n_cells);
  check_boundary(initial, spec);
  if (!(options.t_end > initial.time))
    throw ValidationError("measure_decay: t_end must exceed the initial time");
  initial.values.front() = spec.A;
  initial.values.back() = spec.B;

  const GridField steady = discrete_stationary(spec, initial.n_cells);
  auto dist_discrete = [&steady](const GridField& f) {
    double d = 0.0;
    for (std::size_t j = 0; j < f.values.size(); ++j)
      d = std::max(d, std::fabs(f.values[j] - steady.values[j]));
    return d;
  };

  DecayReport report;
  report.n_cells = initial.n_cells;
  report.predicted_mu = predicted_mu;
  report.max_abs_bound =
      std::max({max_abs(initial.values), std::fabs(spec.A), std::fabs(spec.B)});
  report.max_abs_observed = max_abs(initial.values);
  report.dt_first = stable_dt(initial, spec);

  const long steps_estimate =
      static_cast<long>((options.t_end - initial.time) / report.dt_first) + 1;
  const long stride =
      std::max(1L, steps_estimate / std::max(1, options.max_report_samples - 1));
  const double blowup = 10.0 * std::max(report.max_abs_bound, 1e-30);

  GridField field = std::move(initial);
  report.samples.push_back(
      {field.time, distance_to_stationary(field, profile, spec), dist_discrete(field)});
  std::vector<std::pair<double, double>> fit_series{
      {field.time, options.fit_against_discrete ? report.samples.back().dist_discrete
                                                : report.samples.back().dist_exact}};

  while (field.time < options.t_end) {
    const double dt = std::min(stable_dt(field, spec), options.t_end - field.time);
    step(field, spec, dt);
    ++report.steps;
    const double amp = max_abs(field.values);
    report.max_abs_observed = std::max(report.max_abs_observed, amp);
    if (amp > blowup)
      throw NumericalError("measure_decay: scheme blow-up (max|u| exceeded 10x initial bound)");
    if (report.steps % stride == 0 || field.time >= options.t_end) {
      const DecaySample s{field.time, distance_to_stationary(field, profile, spec),
                          dist_discrete(field)};
      report.samples.push_back(s);
      fit_series.emplace_back(s.t, options.fit_against_discrete ? s.dist_discrete : s.dist_exact);
    }
  }

  const FitResult fit = fit_decay_rate(fit_series, options.hi_frac, options.lo_frac);
  report.fitted_rate = fit.rate;
  report.window_hi = fit.window_hi;
  report.window_lo = fit.window_lo;
  report.reliable = fit.reliable;
  report.relative_error = predicted_mu != 0.0
                              ? std::fabs(fit.rate - predicted_mu) / std::fabs(predicted_mu)
                              : std::fabs(fit.rate);
  return report;
}

}  // namespace burgers
