#pragma once

#include <string_view>

#include "burgers/errors.hpp"

namespace burgers {

/// Boundary-value problem u_t + u u_x = nu u_xx on [0,l],
/// u(0,t) = A, u(l,t) = B.
struct ProblemSpec {
  double nu;  ///< viscosity, > 0
  double l;   ///< interval length, > 0
  double A;   ///< left boundary value u(0,t)
  double B;   ///< right boundary value u(l,t)

  ProblemSpec(double nu_, double l_, double A_, double B_);
};

/// Which of the five stationary families fits the boundary data.
/// The letters follow the usual ordering of the closed-form solutions:
///   TrigCot   (a)  -2 nu k0 cot(k0 (x - x0)),   A < B, H > 0
///   Rational  (b)  -2 nu / (x - x0),            A < B, H = 0
///   HyperCoth (c)  -2 nu k0 coth(k0 (x - x0)),  A < B, H < 0
///   Constant  (d)  u = A,                       A = B
///   HyperTanh (e)  -2 nu k0 tanh(k0 (x - x0)),  A > B
enum class CaseLabel { TrigCot, Rational, HyperCoth, Constant, HyperTanh };

char case_letter(CaseLabel label) noexcept;            // 'a'..'e'
std::string_view case_name(CaseLabel label) noexcept;  // "trig-cot", ...

/// H = 2 nu (B - A) - l A B. Its sign, together with sign(B - A),
/// selects the stationary family.
struct HQuantity {
  double value;
};

HQuantity compute_h(const ProblemSpec& spec) noexcept;

/// True when H vanishes within the relative band
/// 1e-12 * (|2 nu (B-A)| + |l A B|) used to separate cases (a)/(b)/(c).
bool h_is_zero(const ProblemSpec& spec) noexcept;

/// Total, deterministic classification:
///   A > B -> (e);  A = B (bitwise) -> (d);
///   A < B: H > 0 -> (a), H = 0 -> (b), H < 0 -> (c).
CaseLabel classify(const ProblemSpec& spec) noexcept;

}  // namespace burgers
