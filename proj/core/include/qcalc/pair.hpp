#pragma once

#include <cmath>
#include <string_view>

namespace qcalc {

/// An ordered pair of reals. Under the Elliptic product it behaves as a
/// complex number c1 + i c2.
struct Pair {
  double c1 = 0.0;
  double c2 = 0.0;

  friend constexpr bool operator==(const Pair&, const Pair&) = default;
};

/// Component-wise combination.
constexpr Pair pair_sum(Pair u, Pair v) noexcept { return {u.c1 + v.c1, u.c2 + v.c2}; }
constexpr Pair operator+(Pair u, Pair v) noexcept { return pair_sum(u, v); }
constexpr Pair scale(Pair u, double s) noexcept { return {s * u.c1, s * u.c2}; }
constexpr Pair conjugate(Pair u) noexcept { return {u.c1, -u.c2}; }

/// The three associative, non-degenerate pair products up to shear.
enum class NormalForm { Elliptic, Parabolic, Hyperbolic };

std::string_view to_string(NormalForm form) noexcept;

/// Discriminant sign of the normal form: -1, 0, +1.
constexpr int discriminant(NormalForm form) noexcept {
  switch (form) {
    case NormalForm::Elliptic: return -1;
    case NormalForm::Parabolic: return 0;
    case NormalForm::Hyperbolic: return 1;
  }
  return 0;
}

constexpr Pair product(NormalForm form, Pair u, Pair v) noexcept {
  const double mu = discriminant(form);
  // mu = -1, 0, +1 selects the sign of the u2 v2 term.
  return {u.c1 * v.c1 + mu * u.c2 * v.c2, u.c1 * v.c2 + u.c2 * v.c1};
}

/// Complex multiplication, the Elliptic product.
constexpr Pair cmul(Pair u, Pair v) noexcept { return product(NormalForm::Elliptic, u, v); }

/// e^{i phase} as a pair.
inline Pair unit_phasor(double phase) noexcept { return {std::cos(phase), std::sin(phase)}; }

struct Polar {
  double modulus = 0.0;
  double phase = 0.0;
};

/// Modulus and phase under which the given product has multiplicative moduli
/// and additive phases.
///   Elliptic:   (sqrt(x1^2 + x2^2), atan2(x2, x1) in [0, 2pi)), x != 0
///   Parabolic:  (|x1|, x2 / |x1|),                              x1 != 0
///   Hyperbolic: (sqrt(x1^2 - x2^2), artanh(x2 / x1)),           x1^2 > x2^2
Polar polar(NormalForm form, Pair x);

/// Elliptic phase mapped into [0, 2pi).
double wrap_phase(double phase) noexcept;

/// alpha log|x| + beta arg x, with the Elliptic modulus and phase.
double log_valuation(Pair x, double alpha, double beta);

/// beta log|x| - alpha arg x: the combination left free by rate observations.
double conjugate_variable(Pair x, double alpha, double beta);

}  // namespace qcalc
