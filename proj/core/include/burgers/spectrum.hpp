#pragma once

#include <cstddef>
#include <vector>

#include "burgers/problem.hpp"

namespace burgers {

/// Dimensionless Robin coefficients of the transcendental characteristic
/// equations: p = l A B / (2 nu (B - A)), q = 2 nu / (l (B - A)).
/// Defined only for A != B.
struct RobinCoefficients {
  double p;
  double q;
};

RobinCoefficients build_pq(const ProblemSpec& spec);

/// Which family the eigenvalue was found in.
///   Trig:       lambda = +(xi/l)^2, xi a root of cot(xi) = p/xi + q xi
///   Hyperbolic: lambda = -(xi/l)^2, xi a root of coth(xi) = p/xi - q xi
///   Zero:       lambda = 0, eigenfunction x - x0 (boundary data with H = 0)
///   ClosedForm: A = B, lambda_0 = -(A/2nu)^2 and lambda_i = (pi i / l)^2
enum class Branch { Trig, Hyperbolic, Zero, ClosedForm };

/// Hyperbolic eigenfunctions come in two shapes, picked by |A| vs 2 nu k:
/// cosh(k(x-x0)) when |A| < 2 nu k, sinh(k(x-x0)) when |A| > 2 nu k.
enum class HyperbolicForm { None, Sinh, Cosh };

/// One eigenvalue of -X'' = lambda X with X'(0) + (A/2nu) X(0) = 0,
/// X'(l) + (B/2nu) X(l) = 0, plus everything needed to evaluate the
/// (max-abs normalized) eigenfunction.
struct SpectrumEntry {
  std::size_t index = 0;      ///< position in the ascending spectrum
  Branch branch = Branch::Trig;
  HyperbolicForm form = HyperbolicForm::None;
  double xi = 0.0;            ///< scaled root k*l (0 for the zero branch)
  double lambda = 0.0;
  double phase = 0.0;         ///< x_i in the eigenfunction argument
  double amplitude = 1.0;     ///< signed divisor: X = raw / amplitude, X(0) > 0
  int zero_count = 0;         ///< certified interior zeros, equals index
};

/// Entire characteristic of the trig branch,
/// g(xi) = xi cos(xi) - (p + q xi^2) sin(xi); roots coincide with
/// cot(xi) = p/xi + q xi for xi > 0.
double trig_characteristic(const RobinCoefficients& pq, double xi) noexcept;
double trig_characteristic_derivative(const RobinCoefficients& pq, double xi) noexcept;

/// Entire characteristic of the hyperbolic branch, scaled by 2 e^{-xi} to
/// stay bounded: h(xi) = xi (1 + e^{-2 xi}) - (p - q xi^2)(1 - e^{-2 xi}).
/// Roots coincide with coth(xi) = p/xi - q xi for xi > 0.
double hyperbolic_characteristic(const RobinCoefficients& pq, double xi) noexcept;
double hyperbolic_characteristic_derivative(const RobinCoefficients& pq, double xi) noexcept;

/// The `count` smallest positive roots of the trig characteristic,
/// ascending, each with |g| < 1e-12 * (1 + |p| + |q| xi^2).
std::vector<double> trig_roots(const RobinCoefficients& pq, std::size_t count);

/// All positive roots of the hyperbolic characteristic (there are at most
/// two), ascending in xi. Three or more roots is an internal contradiction
/// and throws.
std::vector<double> hyperbolic_roots(const RobinCoefficients& pq);

/// The lowest `count` eigenvalues (count >= 2), strictly ascending, each
/// entry's interior zero count certified equal to its index.
std::vector<SpectrumEntry> spectrum(const ProblemSpec& spec, std::size_t count);

/// X_i(x), max-abs normalized on [0,l] with X_i(0) > 0. x must be in [0,l].
double eval_eigenfunction(const SpectrumEntry& entry, const ProblemSpec& spec, double x);

/// X_i'(x), same normalization as eval_eigenfunction.
double eval_eigenfunction_derivative(const SpectrumEntry& entry, const ProblemSpec& spec,
                                     double x);

/// Count sign changes of X_i strictly inside (0,l) on a uniform scan with
/// at least `scan_resolution` (>= 64) points per unit of xi, refining each
/// change by bisection. Tangential (non-crossing) zeros throw.
int count_interior_zeros(const SpectrumEntry& entry, const ProblemSpec& spec,
                         std::size_t scan_resolution = 64);

/// min |X_0| over [0,l] for a ground-state entry (analytic per branch).
double ground_min_abs(const SpectrumEntry& entry, const ProblemSpec& spec);

}  // namespace burgers
