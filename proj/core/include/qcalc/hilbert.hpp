#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qcalc/pair.hpp"
#include "qcalc/random.hpp"

namespace qcalc {

/// Amplitudes x_k over n orthonormal base states; the base state is the
/// component index (0-based).
class AmplitudeVector {
 public:
  explicit AmplitudeVector(std::vector<Pair> components);
  static AmplitudeVector zeros(std::size_t n);

  std::size_t dimension() const noexcept { return components_.size(); }
  const Pair& operator[](std::size_t k) const { return components_.at(k); }
  std::span<const Pair> components() const noexcept { return components_; }

  /// sum_k |x_k|^2
  double norm2() const noexcept;

  friend bool operator==(const AmplitudeVector&, const AmplitudeVector&) = default;

 private:
  std::vector<Pair> components_;
};

/// Component-wise pair sum of two vectors of equal dimension.
AmplitudeVector operator+(const AmplitudeVector& x, const AmplitudeVector& y);

/// A subset S of the base states {0, ..., n-1}.
class Selection {
 public:
  /// Indices are 0-based; duplicates are merged.
  Selection(std::size_t dimension, std::vector<std::size_t> indices);
  static Selection all(std::size_t dimension);

  std::size_t dimension() const noexcept { return dimension_; }
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  bool contains(std::size_t k) const noexcept;

  Selection complement() const;
  Selection intersect(const Selection& other) const;

  friend bool operator==(const Selection&, const Selection&) = default;

 private:
  std::size_t dimension_;
  std::vector<std::size_t> indices_;
};

/// Square matrix of pairs acting by Elliptic (complex) arithmetic.
class PairMatrix {
 public:
  explicit PairMatrix(std::size_t n);
  static PairMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  Pair& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const Pair& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  PairMatrix adjoint() const;
  friend PairMatrix operator*(const PairMatrix& a, const PairMatrix& b);

  /// max |(U^dagger U - I)_rc|
  double unitarity_deviation() const;

 private:
  std::size_t n_;
  std::vector<Pair> data_;
};

/// One draw from the unit-rate complex Gaussian over n components: each x_k
/// has independent N(0, 1/2) parts, so E[norm2] = n.
AmplitudeVector sample_object(std::size_t n, Rng& rng);
AmplitudeVector sample_object(std::size_t n, Seed seed);

/// `count` independent draws; draw s is reproducible from (seed, s) alone.
std::vector<AmplitudeVector> sample_objects(std::size_t n, std::size_t count, Seed seed,
                                            unsigned threads = 1);

/// X_S = sum_{k in S} x_k. S must be non-empty.
Pair composite_amplitude(const AmplitudeVector& x, const Selection& selection);

/// P_S x: components outside S set to zero.
AmplitudeVector project(const AmplitudeVector& x, const Selection& selection);

/// U x. Throws NotUnitary when max |U^dagger U - I| exceeds `tol`.
AmplitudeVector rotate(const AmplitudeVector& x, const PairMatrix& u, double tol = 1e-9);

/// x / sqrt(norm2(x)), a point on the unit sphere.
AmplitudeVector normalize_single_object(const AmplitudeVector& x);

/// Random unitary built from two-index rotations with random phases followed
/// by diagonal phase multipliers.
PairMatrix random_unitary(std::size_t n, Rng& rng, std::size_t sweeps = 2);

}  // namespace qcalc
