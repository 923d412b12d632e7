#include "qcalc/bilinear_product.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qcalc/errors.hpp"

namespace qcalc {
namespace {

double norm(Pair p) noexcept { return std::hypot(p.c1, p.c2); }

Pair sample_unit_ball(Rng& rng) {
  for (;;) {
    const Pair p{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    if (p.c1 * p.c1 + p.c2 * p.c2 <= 1.0) return p;
  }
}

/// sigma2 / sigma1 of a 4x2 matrix given by its two columns. det(M^T M) is
/// taken from the sum of squared 2x2 minors, which keeps small sigma2 accurate.
double singular_ratio(const std::array<double, 4>& a, const std::array<double, 4>& b) {
  double aa = 0.0, bb = 0.0, minors = 0.0;
  for (std::size_t r = 0; r < 4; ++r) {
    aa += a[r] * a[r];
    bb += b[r] * b[r];
    for (std::size_t s = r + 1; s < 4; ++s) {
      const double m = a[r] * b[s] - a[s] * b[r];
      minors += m * m;
    }
  }
  const double trace = aa + bb;
  if (trace == 0.0) return 0.0;
  const double gap = std::sqrt(std::max(0.0, trace * trace - 4.0 * minors));
  const double sigma1 = std::sqrt(0.5 * (trace + gap));
  const double sigma2 = std::sqrt(minors) / sigma1;
  return sigma2 / sigma1;
}

struct IdentitySolve {
  std::optional<Pair> identity;
  double residual = 0.0;
  double scale = 1.0;
};

/// Least-squares solve of e o b_k = b_k and b_j o e = b_j (8 equations in e).
IdentitySolve solve_identity(const BilinearProduct& g, double tol) {
  std::array<std::array<double, 2>, 8> a{};
  std::array<double, 8> rhs{};
  std::size_t row = 0;
  for (int k = 0; k < 2; ++k) {
    for (int i = 0; i < 2; ++i, ++row) {
      a[row] = {g(i, 0, k), g(i, 1, k)};
      rhs[row] = i == k ? 1.0 : 0.0;
    }
  }
  for (int j = 0; j < 2; ++j) {
    for (int i = 0; i < 2; ++i, ++row) {
      a[row] = {g(i, j, 0), g(i, j, 1)};
      rhs[row] = i == j ? 1.0 : 0.0;
    }
  }

  // Modified Gram-Schmidt QR on the two columns.
  std::array<double, 8> q1{}, q2{};
  double r11 = 0.0, rest = 0.0;
  for (std::size_t r = 0; r < 8; ++r) {
    r11 += a[r][0] * a[r][0];
    rest += a[r][1] * a[r][1];
  }
  IdentitySolve out;
  const double frob = std::sqrt(r11 + rest);
  r11 = std::sqrt(r11);
  if (frob == 0.0 || !(r11 > tol * frob)) return out;
  double r12 = 0.0;
  for (std::size_t r = 0; r < 8; ++r) {
    q1[r] = a[r][0] / r11;
    r12 += q1[r] * a[r][1];
  }
  double r22 = 0.0;
  for (std::size_t r = 0; r < 8; ++r) {
    q2[r] = a[r][1] - r12 * q1[r];
    r22 += q2[r] * q2[r];
  }
  r22 = std::sqrt(r22);
  if (!(r22 > tol * frob)) return out;
  double qb1 = 0.0, qb2 = 0.0;
  for (std::size_t r = 0; r < 8; ++r) {
    q2[r] /= r22;
    qb1 += q1[r] * rhs[r];
    qb2 += q2[r] * rhs[r];
  }
  const double e2 = qb2 / r22;
  const double e1 = (qb1 - r12 * e2) / r11;
  double residual = 0.0;
  for (std::size_t r = 0; r < 8; ++r) {
    const double d = a[r][0] * e1 + a[r][1] * e2 - rhs[r];
    residual += d * d;
  }
  out.identity = Pair{e1, e2};
  out.residual = std::sqrt(residual);
  out.scale = 1.0 + frob * norm(*out.identity);
  return out;
}

std::array<double, 4> left_multiplication(const BilinearProduct& g, Pair u) {
  // L(i, k) = sum_j gamma_ijk u_j, row-major.
  std::array<double, 4> l{};
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 2; ++k) l[2 * i + k] = g(i, 0, k) * u.c1 + g(i, 1, k) * u.c2;
  }
  return l;
}

}  // namespace

BilinearProduct::BilinearProduct(const std::array<double, 8>& flat) : gamma_(flat) {
  for (std::size_t n = 0; n < gamma_.size(); ++n) {
    if (!std::isfinite(gamma_[n])) {
      throw DomainError("BilinearProduct: coefficient " + std::to_string(n) + " is not finite");
    }
  }
}

BilinearProduct BilinearProduct::normal_form(NormalForm form) {
  BilinearProduct g;
  g.set(0, 0, 0, 1.0);
  g.set(0, 1, 1, discriminant(form));
  g.set(1, 0, 1, 1.0);
  g.set(1, 1, 0, 1.0);
  return g;
}

void BilinearProduct::set(int i, int j, int k, double value) {
  if (!std::isfinite(value)) throw DomainError("BilinearProduct: coefficient is not finite");
  gamma_[flat_index(i, j, k)] = value;
}

Pair BilinearProduct::apply(Pair u, Pair v) const noexcept {
  const double uj[2] = {u.c1, u.c2};
  const double vk[2] = {v.c1, v.c2};
  double out[2] = {0.0, 0.0};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) out[i] += (*this)(i, j, k) * uj[j] * vk[k];
    }
  }
  return {out[0], out[1]};
}

BilinearProduct BilinearProduct::sheared(const Matrix& t) const {
  if (t.rows() != 2 || t.cols() != 2) throw DimensionMismatch("sheared: transform must be 2x2");
  const double det = t.determinant();
  if (det == 0.0) throw SingularTransform("sheared: transform is singular");
  const double inv[2][2] = {{t(1, 1) / det, -t(0, 1) / det}, {-t(1, 0) / det, t(0, 0) / det}};
  BilinearProduct out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        double acc = 0.0;
        for (int l = 0; l < 2; ++l) {
          for (int m = 0; m < 2; ++m) {
            for (int n = 0; n < 2; ++n) acc += t(i, l) * (*this)(l, m, n) * inv[m][j] * inv[n][k];
          }
        }
        out.set(i, j, k, acc);
      }
    }
  }
  return out;
}

double BilinearProduct::frobenius_norm() const noexcept {
  double s = 0.0;
  for (double g : gamma_) s += g * g;
  return std::sqrt(s);
}

AssociativityReport check_associativity(const BilinearProduct& product, std::size_t n_samples,
                                        double tol, Seed seed) {
  if (n_samples == 0) throw DomainError("check_associativity: n_samples must be at least 1");
  Rng rng(seed);
  AssociativityReport report;
  for (std::size_t s = 0; s < n_samples; ++s) {
    const Pair u = sample_unit_ball(rng);
    const Pair v = sample_unit_ball(rng);
    const Pair w = sample_unit_ball(rng);
    const Pair left = product.apply(product.apply(u, v), w);
    const Pair right = product.apply(u, product.apply(v, w));
    const double residual = std::hypot(left.c1 - right.c1, left.c2 - right.c2) /
                            (1.0 + norm(u) * norm(v) * norm(w));
    report.max_residual = std::max(report.max_residual, residual);
  }
  report.associative = report.max_residual <= tol;
  return report;
}

DegeneracyReport check_degeneracy(const BilinearProduct& g, double tol) {
  // v slot: rows (i, j), columns k.  u slot: rows (i, k), columns j.
  std::array<double, 4> v0{}, v1{}, u0{}, u1{};
  for (int i = 0; i < 2; ++i) {
    for (int x = 0; x < 2; ++x) {
      v0[2 * i + x] = g(i, x, 0);
      v1[2 * i + x] = g(i, x, 1);
      u0[2 * i + x] = g(i, 0, x);
      u1[2 * i + x] = g(i, 1, x);
    }
  }
  DegeneracyReport report;
  report.u_slot_ratio = singular_ratio(u0, u1);
  report.v_slot_ratio = singular_ratio(v0, v1);
  report.degenerate = report.u_slot_ratio <= tol || report.v_slot_ratio <= tol;
  return report;
}

ProductClass ProductClass::of(NormalForm form) {
  switch (form) {
    case NormalForm::Elliptic: return {ProductClassTag::Elliptic, -1};
    case NormalForm::Parabolic: return {ProductClassTag::Parabolic, 0};
    case NormalForm::Hyperbolic: return {ProductClassTag::Hyperbolic, 1};
  }
  return {};
}

std::optional<NormalForm> ProductClass::normal_form() const noexcept {
  switch (tag) {
    case ProductClassTag::Elliptic: return NormalForm::Elliptic;
    case ProductClassTag::Parabolic: return NormalForm::Parabolic;
    case ProductClassTag::Hyperbolic: return NormalForm::Hyperbolic;
    default: return std::nullopt;
  }
}

std::string to_string(const ProductClass& cls) {
  if (auto form = cls.normal_form()) {
    return std::string(to_string(*form)) + " (mu = " + std::to_string(*cls.mu) + ")";
  }
  return cls.tag == ProductClassTag::Degenerate ? "Degenerate" : "NonAssociative";
}

Classification classify_detailed(const BilinearProduct& product, const ClassifyOptions& options) {
  Classification out;
  out.associativity = check_associativity(product, options.n_samples, options.tol, options.seed);
  if (!out.associativity.associative) {
    out.product_class = {ProductClassTag::NonAssociative, std::nullopt};
    return out;
  }
  out.degeneracy = check_degeneracy(product, options.tol);
  if (out.degeneracy.degenerate) {
    out.product_class = {ProductClassTag::Degenerate, std::nullopt};
    return out;
  }

  const IdentitySolve solve = solve_identity(product, options.tol);
  if (!solve.identity || solve.residual > options.tol * solve.scale) {
    const double residual =
        solve.identity ? solve.residual : std::numeric_limits<double>::infinity();
    throw ClassificationFailure(
        "classify: associative non-degenerate product has no two-sided identity (residual " +
            std::to_string(residual) + ")",
        residual);
  }
  const Pair e = *solve.identity;
  out.identity = e;
  out.identity_residual = solve.residual;

  // Generic element u = e + w, w the first candidate not parallel to e, and
  // whose left multiplication is not a multiple of the identity.
  constexpr Pair candidates[] = {{1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}, {1.0, -1.0}, {1.0, 2.0}};
  for (const Pair w : candidates) {
    if (std::abs(e.c1 * w.c2 - e.c2 * w.c1) <= options.tol * norm(e) * norm(w)) continue;
    const auto l = left_multiplication(product, e + w);
    const double scale = l[0] * l[0] + l[1] * l[1] + l[2] * l[2] + l[3] * l[3];
    const double off = std::max({std::abs(l[1]), std::abs(l[2]), std::abs(l[0] - l[3])});
    if (off <= options.tol * std::sqrt(scale)) continue;
    const double trace = l[0] + l[3];
    const double det = l[0] * l[3] - l[1] * l[2];
    out.discriminant = trace * trace - 4.0 * det;
    out.discriminant_scale = scale;
    const double band = options.tol * scale;
    if (out.discriminant < -band) {
      out.product_class = ProductClass::of(NormalForm::Elliptic);
    } else if (out.discriminant > band) {
      out.product_class = ProductClass::of(NormalForm::Hyperbolic);
    } else {
      out.product_class = ProductClass::of(NormalForm::Parabolic);
    }
    return out;
  }
  throw ClassificationFailure("classify: every candidate element acts as a scalar", 0.0);
}

}  // namespace qcalc
