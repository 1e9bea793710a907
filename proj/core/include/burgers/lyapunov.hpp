#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "burgers/spectrum.hpp"

namespace burgers {

/// mu_i = -nu (lambda_i - lambda_0), i = 1..count. All negative, strictly
/// decreasing. entries holds the source spectrum (indices 0..count).
struct LyapunovSpectrum {
  std::vector<double> mu;              ///< mu[i-1] is the i-th exponent
  std::vector<SpectrumEntry> entries;  ///< lambda_0 .. lambda_count
};

LyapunovSpectrum lyapunov_exponents(const ProblemSpec& spec, std::size_t count);

/// Two-term solution u(x,t) = -2 nu d/dx ln|c X_0 e^{-nu lambda_0 t} +
/// alpha X_i e^{-nu lambda_i t}|, the explicit realization of the decay
/// rate mu_i. The amplitude bound |alpha| < min|X_0| |c| / max|X_i| keeps
/// the denominator away from zero for all t >= 0.
struct ModalSolution {
  ProblemSpec spec;
  SpectrumEntry ground;  ///< index 0
  SpectrumEntry mode;    ///< index i >= 1
  double c_ground;       ///< nonzero
  double alpha;
};

/// Build a modal solution for mode_index >= 1 with the default safe
/// amplitude alpha = alpha_fraction * min|X_0| * c_ground.
ModalSolution make_modal_solution(const ProblemSpec& spec, std::size_t mode_index,
                                  double alpha_fraction = 1e-3);

/// Same, with explicit amplitudes; rejects pairs violating the
/// denominator bound.
ModalSolution make_modal_solution(const ProblemSpec& spec, std::size_t mode_index,
                                  double c_ground, double alpha);

/// The exponent this solution decays at: -nu (lambda_i - lambda_0).
double modal_mu(const ModalSolution& m) noexcept;

/// Evaluate u_i(x,t) for x in [0,l], t >= 0.
double eval_modal_solution(const ModalSolution& m, double x, double t);

/// (t, D(t)) with D(t) = max over a 1025-point grid of |u_i(x,t) - u^S(x)|.
/// times must be nondecreasing and nonnegative.
std::vector<std::pair<double, double>> modal_decay_curve(const ModalSolution& m,
                                                         std::span<const double> times);

/// Discrete Cole-Hopf transform: u = -2 nu (ln|phi|)'_x by second-order
/// differences (central inside, one-sided at the ends) of uniformly
/// gridded, nonzero, same-sign samples with spacing h.
std::vector<double> cole_hopf_numeric(std::span<const double> phi_samples, double h, double nu);

}  // namespace burgers
