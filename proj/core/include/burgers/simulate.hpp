#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "burgers/lyapunov.hpp"
#include "burgers/stationary.hpp"

namespace burgers {

/// Nodal velocity samples on the uniform grid x_j = j h, h = l / n_cells.
/// values[0] = A and values[n_cells] = B are pinned at all times.
struct GridField {
  int n_cells = 0;  ///< >= 16
  double h = 0.0;
  double time = 0.0;
  std::vector<double> values;  ///< n_cells + 1 nodes
};

GridField make_field(const ProblemSpec& spec, int n_cells);
GridField sample_stationary_field(const StationaryProfile& profile, const ProblemSpec& spec,
                                  int n_cells);
/// u^S + eps sin(pi x / l); endpoints stay exactly at A, B.
GridField perturbed_stationary_field(const StationaryProfile& profile, const ProblemSpec& spec,
                                     int n_cells, double eps);
/// Modal solution sampled at t = 0 (single-mode initial data).
GridField sample_modal_field(const ModalSolution& m, int n_cells);

/// Largest stable explicit step: 0.9 min(h^2/(2 nu), h/(max|u| + eps)).
double stable_dt(const GridField& field, const ProblemSpec& spec);

/// One explicit step: conservative central flux for (u^2/2)_x plus central
/// second difference for nu u_xx; endpoints pinned. dt above the stability
/// bound is rejected.
void step(GridField& field, const ProblemSpec& spec, double dt);

/// March to t_end with automatic dt, collecting a snapshot every
/// sample_every_steps steps (plus the initial and final states).
/// Blow-up (max|u| above 10x the initial bound) throws.
std::vector<GridField> evolve(const ProblemSpec& spec, GridField initial, double t_end,
                              int sample_every_steps);

/// max over nodes of |values[j] - u^S(x_j)|.
double distance_to_stationary(const GridField& field, const StationaryProfile& profile,
                              const ProblemSpec& spec);

/// Fixed point of the spatial discretization (Newton on the interior
/// residual with a tridiagonal solve). The explicit march converges to
/// this state, not to the analytic profile.
GridField discrete_stationary(const ProblemSpec& spec, int n_cells);

struct FitResult {
  double rate = 0.0;
  bool reliable = false;  ///< at least 10 in-window samples
  int n_used = 0;
  double window_hi = 0.0;
  double window_lo = 0.0;
};

/// Least-squares slope of ln D vs t over the window
/// D in [lo_frac, hi_frac] * D(0); samples below 1e-12 * D(0) are dropped.
FitResult fit_decay_rate(std::span<const std::pair<double, double>> samples,
                         double hi_frac = 1e-2, double lo_frac = 1e-8);

struct DecaySample {
  double t;
  double dist_exact;     ///< distance to the analytic stationary profile
  double dist_discrete;  ///< distance to the scheme's own fixed point
};

struct DecayReport {
  std::vector<DecaySample> samples;
  double fitted_rate = 0.0;
  double predicted_mu = 0.0;
  double relative_error = 0.0;
  double window_hi = 0.0;
  double window_lo = 0.0;
  bool reliable = false;
  double max_abs_observed = 0.0;  ///< running max of max|u| over the run
  double max_abs_bound = 0.0;     ///< max(initial max|u|, |A|, |B|)
  int n_cells = 0;
  double dt_first = 0.0;
  long steps = 0;
};

struct DecayOptions {
  double t_end = 0.0;
  double hi_frac = 1e-2;
  double lo_frac = 1e-8;
  bool fit_against_discrete = true;  ///< fit on dist_discrete (clean floor)
  int max_report_samples = 1001;
};

/// Run the solver from `initial`, record the distance history, and fit the
/// empirical decay rate against predicted_mu.
DecayReport measure_decay(const ProblemSpec& spec, GridField initial,
                          const StationaryProfile& profile, double predicted_mu,
                          const DecayOptions& options);

}  // namespace burgers
