#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>

#include "qcalc/matrix.hpp"
#include "qcalc/pair.hpp"
#include "qcalc/random.hpp"

namespace qcalc {

/// A general bilinear pair product (u o v)_i = sum_jk gamma_ijk u_j v_k.
///
/// The flat layout is gamma111, gamma112, gamma121, gamma122, gamma211,
/// gamma212, gamma221, gamma222, i.e. index (i, j, k) (1-based) lives at
/// 4(i-1) + 2(j-1) + (k-1). Accessors below take 0-based indices.
class BilinearProduct {
 public:
  BilinearProduct() = default;
  explicit BilinearProduct(const std::array<double, 8>& flat);

  static BilinearProduct normal_form(NormalForm form);

  double operator()(int i, int j, int k) const noexcept { return gamma_[flat_index(i, j, k)]; }
  void set(int i, int j, int k, double value);
  const std::array<double, 8>& flat() const noexcept { return gamma_; }

  Pair apply(Pair u, Pair v) const noexcept;

  /// The same product expressed in sheared coordinates x' = T x, i.e. the
  /// tensor g' with T(u o v) = (T u) o' (T v). T must be 2x2 and non-singular.
  BilinearProduct sheared(const Matrix& transform) const;

  double frobenius_norm() const noexcept;

  friend bool operator==(const BilinearProduct&, const BilinearProduct&) = default;

  static constexpr std::size_t flat_index(int i, int j, int k) noexcept {
    return static_cast<std::size_t>(4 * i + 2 * j + k);
  }

 private:
  std::array<double, 8> gamma_{};
};

inline Pair general_product(const BilinearProduct& product, Pair u, Pair v) noexcept {
  return product.apply(u, v);
}

inline constexpr Seed kAssociativitySeed = 0x61737363ull;

struct AssociativityReport {
  bool associative = false;
  /// max ||(u o v) o w - u o (v o w)|| / (1 + |u||v||w|) over the samples.
  double max_residual = 0.0;
};

/// Samples triples from the unit ball and measures the associator.
AssociativityReport check_associativity(const BilinearProduct& product, std::size_t n_samples = 256,
                                        double tol = 1e-9, Seed seed = kAssociativitySeed);

inline bool is_associative(const BilinearProduct& product, std::size_t n_samples = 256,
                           double tol = 1e-9, Seed seed = kAssociativitySeed) {
  return check_associativity(product, n_samples, tol, seed).associative;
}

struct DegeneracyReport {
  bool degenerate = false;
  /// sigma2 / sigma1 of the 4x2 flattening over the u slot (j) and v slot (k).
  double u_slot_ratio = 0.0;
  double v_slot_ratio = 0.0;
};

/// A product is degenerate when one factor enters only through a single
/// linear functional, i.e. a flattening of gamma has rank <= 1.
DegeneracyReport check_degeneracy(const BilinearProduct& product, double tol = 1e-9);

inline bool is_degenerate(const BilinearProduct& product, double tol = 1e-9) {
  return check_degeneracy(product, tol).degenerate;
}

enum class ProductClassTag { Elliptic, Parabolic, Hyperbolic, Degenerate, NonAssociative };

struct ProductClass {
  ProductClassTag tag = ProductClassTag::NonAssociative;
  /// -1, 0, +1 for Elliptic, Parabolic, Hyperbolic; empty otherwise.
  std::optional<int> mu;

  static ProductClass of(NormalForm form);
  std::optional<NormalForm> normal_form() const noexcept;

  friend bool operator==(const ProductClass&, const ProductClass&) = default;
};

/// "Elliptic (mu = -1)", "Degenerate", ...
std::string to_string(const ProductClass& cls);

struct ClassifyOptions {
  double tol = 1e-9;
  std::size_t n_samples = 256;
  Seed seed = kAssociativitySeed;
};

struct Classification {
  ProductClass product_class;
  AssociativityReport associativity;
  DegeneracyReport degeneracy;
  /// Two-sided identity and its least-squares residual (non-degenerate
  /// associative products only).
  std::optional<Pair> identity;
  double identity_residual = 0.0;
  /// Discriminant tr^2 - 4 det of the left multiplication by a generic element,
  /// and the scale ||L||_F^2 it is compared against.
  double discriminant = 0.0;
  double discriminant_scale = 0.0;
};

/// Full classification record. Throws ClassificationFailure when an
/// associative, non-degenerate product has no two-sided identity.
Classification classify_detailed(const BilinearProduct& product, const ClassifyOptions& options = {});

inline ProductClass classify(const BilinearProduct& product, const ClassifyOptions& options = {}) {
  return classify_detailed(product, options).product_class;
}

}  // namespace qcalc
