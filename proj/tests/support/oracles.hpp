#pragma once

// Test-side reference constructions that do not go through the library
// routines they are used to check.

#include <array>

#include "qcalc/bilinear_product.hpp"
#include "qcalc/matrix.hpp"
#include "qcalc/random.hpp"

namespace qcalc::testing {

/// gamma' for coordinates x' = T x, built by probing the original product on
/// the pulled-back basis: gamma'_ijk = [T ((T^-1 e_j) o (T^-1 e_k))]_i.
inline BilinearProduct probe_sheared(const BilinearProduct& g, const Matrix& t) {
  const double det = t(0, 0) * t(1, 1) - t(0, 1) * t(1, 0);
  const Matrix inv{{t(1, 1) / det, -t(0, 1) / det}, {-t(1, 0) / det, t(0, 0) / det}};
  BilinearProduct out;
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) {
      const Pair a{inv(0, j), inv(1, j)};
      const Pair b{inv(0, k), inv(1, k)};
      const Pair p = g.apply(a, b);
      out.set(0, j, k, t(0, 0) * p.c1 + t(0, 1) * p.c2);
      out.set(1, j, k, t(1, 0) * p.c1 + t(1, 1) * p.c2);
    }
  }
  return out;
}

/// Eight coefficients uniform on [-1, 1].
inline BilinearProduct dense_random(Seed seed) {
  Rng rng(seed);
  std::array<double, 8> flat{};
  for (double& g : flat) g = rng.uniform(-1.0, 1.0);
  return BilinearProduct(flat);
}

/// 22a: u o v = (u1 v1, u2 v1); 22b: u o v = (u1 v1, u1 v2).
inline BilinearProduct left_scalar_form() { return BilinearProduct({1, 0, 0, 0, 0, 0, 1, 0}); }
inline BilinearProduct right_scalar_form() { return BilinearProduct({1, 0, 0, 0, 0, 1, 0, 0}); }

}  // namespace qcalc::testing
