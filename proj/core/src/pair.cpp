#include "qcalc/pair.hpp"

#include <numbers>

#include "qcalc/errors.hpp"

namespace qcalc {

std::string_view to_string(NormalForm form) noexcept {
  switch (form) {
    case NormalForm::Elliptic: return "Elliptic";
    case NormalForm::Parabolic: return "Parabolic";
    case NormalForm::Hyperbolic: return "Hyperbolic";
  }
  return "?";
}

double wrap_phase(double phase) noexcept {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double wrapped = std::fmod(phase, two_pi);
  if (wrapped < 0.0) wrapped += two_pi;
  // fmod of a tiny negative value can round up to exactly 2pi.
  return wrapped >= two_pi ? 0.0 : wrapped;
}

Polar polar(NormalForm form, Pair x) {
  switch (form) {
    case NormalForm::Elliptic:
      if (x.c1 == 0.0 && x.c2 == 0.0) throw DomainError("polar(Elliptic): x must be non-zero");
      return {std::hypot(x.c1, x.c2), wrap_phase(std::atan2(x.c2, x.c1))};
    case NormalForm::Parabolic:
      if (x.c1 == 0.0) throw DomainError("polar(Parabolic): x1 must be non-zero");
      return {std::abs(x.c1), x.c2 / std::abs(x.c1)};
    case NormalForm::Hyperbolic:
      if (!(x.c1 * x.c1 > x.c2 * x.c2)) {
        throw DomainError("polar(Hyperbolic): requires x1^2 > x2^2");
      }
      // (x1 - x2)(x1 + x2) avoids cancellation near the light cone.
      return {std::sqrt((x.c1 - x.c2) * (x.c1 + x.c2)), std::atanh(x.c2 / x.c1)};
  }
  throw DomainError("polar: unknown normal form");
}

double log_valuation(Pair x, double alpha, double beta) {
  if (x.c1 == 0.0 && x.c2 == 0.0) throw DomainError("log_valuation: x must be non-zero");
  const Polar p = polar(NormalForm::Elliptic, x);
  return alpha * std::log(p.modulus) + beta * p.phase;
}

double conjugate_variable(Pair x, double alpha, double beta) {
  if (x.c1 == 0.0 && x.c2 == 0.0) throw DomainError("conjugate_variable: x must be non-zero");
  const Polar p = polar(NormalForm::Elliptic, x);
  return beta * std::log(p.modulus) - alpha * p.phase;
}

}  // namespace qcalc
