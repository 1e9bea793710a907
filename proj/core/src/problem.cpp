#include "burgers/problem.hpp"

#include <cmath>
#include <string>

namespace burgers {

ProblemSpec::ProblemSpec(double nu_, double l_, double A_, double B_)
    : nu(nu_), l(l_), A(A_), B(B_) {
  if (!(nu > 0.0) || !std::isfinite(nu))
    throw ValidationError("ProblemSpec: nu must be positive, got " + std::to_string(nu_));
  if (!(l > 0.0) || !std::isfinite(l))
    throw ValidationError("ProblemSpec: l must be positive, got " + std::to_string(l_));
  if (!std::isfinite(A) || !std::isfinite(B))
    throw ValidationError("ProblemSpec: boundary values must be finite");
}

char case_letter(CaseLabel label) noexcept {
  switch (label) {
    case CaseLabel::TrigCot: return 'a';
    case CaseLabel::Rational: return 'b';
    case CaseLabel::HyperCoth: return 'c';
    case CaseLabel::Constant: return 'd';
    case CaseLabel::HyperTanh: return 'e';
  }
  return '?';
}

std::string_view case_name(CaseLabel label) noexcept {
  switch (label) {
    case CaseLabel::TrigCot: return "trig-cot";
    case CaseLabel::Rational: return "rational";
    case CaseLabel::HyperCoth: return "hyper-coth";
    case CaseLabel::Constant: return "constant";
    case CaseLabel::HyperTanh: return "hyper-tanh";
  }
  return "?";
}

HQuantity compute_h(const ProblemSpec& spec) noexcept {
  return {2.0 * spec.nu * (spec.B - spec.A) - spec.l * spec.A * spec.B};
}

bool h_is_zero(const ProblemSpec& spec) noexcept {
  const double growth = 2.0 * spec.nu * (spec.B - spec.A);
  const double advect = spec.l * spec.A * spec.B;
  return std::fabs(growth - advect) <= 1e-12 * (std::fabs(growth) + std::fabs(advect));
}

CaseLabel classify(const ProblemSpec& spec) noexcept {
  if (spec.A > spec.B) return CaseLabel::HyperTanh;
  // boundary data are stated, not measured: compare exactly
  if (spec.A == spec.B) return CaseLabel::Constant;
  if (h_is_zero(spec)) return CaseLabel::Rational;
  return compute_h(spec).value > 0.0 ? CaseLabel::TrigCot : CaseLabel::HyperCoth;
}

}  // namespace burgers
