#pragma once

#include <span>

#include "burgers/problem.hpp"

namespace burgers {

/// Parameters of the closed-form stationary solution. The integration
/// constant c0 of 2 nu u' = u^2 + c0 fixes the branch:
/// c0 = +(2 nu k0)^2 for (a), 0 for (b), -(2 nu k0)^2 for (c),(d),(e);
/// lambda_0 = c0 / (4 nu^2) is the least eigenvalue of the spectrum.
struct StationaryProfile {
  CaseLabel label;
  double k0;  ///< wavenumber, >= 0 (zero only for case (b))
  double x0;  ///< phase offset; may lie outside [0,l], never inside for (b),(c)
  double c0;
};

/// Solve for the stationary profile matching u(0) = A, u(l) = B.
/// Cases (a),(c),(e) take k0 and the phase from the ground state of the
/// Robin eigenproblem (single root source); (b) and (d) are closed forms.
StationaryProfile solve_stationary(const ProblemSpec& spec);

/// u^S(x) from the case formula; finite on all of [0,l].
double eval_stationary(const StationaryProfile& profile, const ProblemSpec& spec, double x);

struct StationaryDerivatives {
  double u;
  double ux;
  double uxx;
};

/// Analytic u, u', u'' of the case formula at x.
StationaryDerivatives stationary_derivatives(const StationaryProfile& profile,
                                             const ProblemSpec& spec, double x);

struct ResidualReport {
  double max_flux_residual;  ///< max |2 nu u' - u^2 - c0|
  double max_ode_residual;   ///< max |u u' - nu u''|
};

/// Largest defect of the first integral and of the stationary ODE over
/// the given grid points (all must lie in [0,l]).
ResidualReport stationary_residual(const StationaryProfile& profile, const ProblemSpec& spec,
                                   std::span<const double> grid);

}  // namespace burgers
