#include "qcalc/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "qcalc/born.hpp"
#include "qcalc/errors.hpp"

namespace qcalc {

AmplitudeVector::AmplitudeVector(std::vector<Pair> components) : components_(std::move(components)) {
  if (components_.empty()) throw DomainError("AmplitudeVector: dimension must be at least 1");
  for (std::size_t k = 0; k < components_.size(); ++k) {
    if (!std::isfinite(components_[k].c1) || !std::isfinite(components_[k].c2)) {
      throw DomainError("AmplitudeVector: component " + std::to_string(k) + " is not finite");
    }
  }
}

AmplitudeVector AmplitudeVector::zeros(std::size_t n) {
  return AmplitudeVector(std::vector<Pair>(n));
}

double AmplitudeVector::norm2() const noexcept {
  double total = 0.0;
  for (const Pair& x : components_) total += born(x);
  return total;
}

AmplitudeVector operator+(const AmplitudeVector& x, const AmplitudeVector& y) {
  if (x.dimension() != y.dimension()) {
    throw DimensionMismatch("AmplitudeVector sum: dimensions " + std::to_string(x.dimension()) +
                            " and " + std::to_string(y.dimension()));
  }
  std::vector<Pair> out(x.dimension());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = x[k] + y[k];
  return AmplitudeVector(std::move(out));
}

Selection::Selection(std::size_t dimension, std::vector<std::size_t> indices)
    : dimension_(dimension), indices_(std::move(indices)) {
  if (dimension_ == 0) throw DomainError("Selection: dimension must be at least 1");
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  if (!indices_.empty() && indices_.back() >= dimension_) {
    throw DomainError("Selection: index " + std::to_string(indices_.back()) +
                      " out of range for dimension " + std::to_string(dimension_));
  }
}

Selection Selection::all(std::size_t dimension) {
  std::vector<std::size_t> idx(dimension);
  for (std::size_t k = 0; k < dimension; ++k) idx[k] = k;
  return Selection(dimension, std::move(idx));
}

bool Selection::contains(std::size_t k) const noexcept {
  return std::binary_search(indices_.begin(), indices_.end(), k);
}

Selection Selection::complement() const {
  std::vector<std::size_t> rest;
  for (std::size_t k = 0; k < dimension_; ++k) {
    if (!contains(k)) rest.push_back(k);
  }
  return Selection(dimension_, std::move(rest));
}

Selection Selection::intersect(const Selection& other) const {
  if (other.dimension_ != dimension_) {
    throw DimensionMismatch("Selection::intersect: dimensions differ");
  }
  std::vector<std::size_t> both;
  std::set_intersection(indices_.begin(), indices_.end(), other.indices_.begin(),
                        other.indices_.end(), std::back_inserter(both));
  return Selection(dimension_, std::move(both));
}

PairMatrix::PairMatrix(std::size_t n) : n_(n), data_(n * n) {
  if (n == 0) throw DomainError("PairMatrix: size must be at least 1");
}

PairMatrix PairMatrix::identity(std::size_t n) {
  PairMatrix m(n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = {1.0, 0.0};
  return m;
}

PairMatrix PairMatrix::adjoint() const {
  PairMatrix out(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) out(c, r) = conjugate((*this)(r, c));
  }
  return out;
}

PairMatrix operator*(const PairMatrix& a, const PairMatrix& b) {
  if (a.size() != b.size()) throw DimensionMismatch("PairMatrix product: sizes differ");
  const std::size_t n = a.size();
  PairMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      Pair acc;
      for (std::size_t k = 0; k < n; ++k) acc = acc + cmul(a(r, k), b(k, c));
      out(r, c) = acc;
    }
  }
  return out;
}

double PairMatrix::unitarity_deviation() const {
  const PairMatrix g = adjoint() * (*this);
  double worst = 0.0;
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      const Pair target = r == c ? Pair{1.0, 0.0} : Pair{};
      worst = std::max(worst, std::hypot(g(r, c).c1 - target.c1, g(r, c).c2 - target.c2));
    }
  }
  return worst;
}

AmplitudeVector sample_object(std::size_t n, Rng& rng) {
  if (n == 0) throw DomainError("sample_object: n must be at least 1");
  constexpr double sd = 0.70710678118654752440;  // sqrt(1/2)
  std::vector<Pair> x(n);
  for (Pair& p : x) {
    p.c1 = rng.normal(0.0, sd);
    p.c2 = rng.normal(0.0, sd);
  }
  return AmplitudeVector(std::move(x));
}

AmplitudeVector sample_object(std::size_t n, Seed seed) {
  Rng rng(seed);
  return sample_object(n, rng);
}

std::vector<AmplitudeVector> sample_objects(std::size_t n, std::size_t count, Seed seed,
                                            unsigned threads) {
  if (n == 0) throw DomainError("sample_objects: n must be at least 1");
  std::vector<AmplitudeVector> out(count, AmplitudeVector::zeros(n));
  for_each_chunk(count, seed, threads,
                 [&](std::size_t, std::size_t begin, std::size_t end, Rng& rng) {
                   for (std::size_t s = begin; s < end; ++s) out[s] = sample_object(n, rng);
                 });
  return out;
}

Pair composite_amplitude(const AmplitudeVector& x, const Selection& selection) {
  if (selection.dimension() != x.dimension()) {
    throw DimensionMismatch("composite_amplitude: selection over " +
                            std::to_string(selection.dimension()) + " states, vector has " +
                            std::to_string(x.dimension()));
  }
  if (selection.empty()) throw DomainError("composite_amplitude: empty selection");
  Pair total;
  for (std::size_t k : selection.indices()) total = pair_sum(total, x[k]);
  return total;
}

AmplitudeVector project(const AmplitudeVector& x, const Selection& selection) {
  if (selection.dimension() != x.dimension()) {
    throw DimensionMismatch("project: selection over " + std::to_string(selection.dimension()) +
                            " states, vector has " + std::to_string(x.dimension()));
  }
  std::vector<Pair> out(x.dimension());
  for (std::size_t k : selection.indices()) out[k] = x[k];
  return AmplitudeVector(std::move(out));
}

AmplitudeVector rotate(const AmplitudeVector& x, const PairMatrix& u, double tol) {
  if (u.size() != x.dimension()) {
    throw DimensionMismatch("rotate: matrix is " + std::to_string(u.size()) + "x" +
                            std::to_string(u.size()) + ", vector has dimension " +
                            std::to_string(x.dimension()));
  }
  const double deviation = u.unitarity_deviation();
  if (!(deviation <= tol)) {
    throw NotUnitary("rotate: matrix is not unitary (max |U^dagger U - I| = " +
                         std::to_string(deviation) + ")",
                     deviation);
  }
  std::vector<Pair> y(x.dimension());
  for (std::size_t r = 0; r < y.size(); ++r) {
    for (std::size_t c = 0; c < y.size(); ++c) y[r] = y[r] + cmul(u(r, c), x[c]);
  }
  return AmplitudeVector(std::move(y));
}

AmplitudeVector normalize_single_object(const AmplitudeVector& x) {
  const double n2 = x.norm2();
  if (!(n2 > 0.0)) throw DomainError("normalize_single_object: zero vector");
  const double inv = 1.0 / std::sqrt(n2);
  std::vector<Pair> psi(x.components().begin(), x.components().end());
  for (Pair& p : psi) p = scale(p, inv);
  return AmplitudeVector(std::move(psi));
}

PairMatrix random_unitary(std::size_t n, Rng& rng, std::size_t sweeps) {
  PairMatrix u = PairMatrix::identity(n);
  for (std::size_t sweep = 0; sweep < sweeps; ++sweep) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        // rows p, q <- [[c, -s e^{i phi}], [s e^{-i phi}, c]] applied from the left
        const double angle = rng.phase();
        const Pair rot = unit_phasor(rng.phase());
        const double c = std::cos(angle);
        const double s = std::sin(angle);
        for (std::size_t col = 0; col < n; ++col) {
          const Pair a = u(p, col);
          const Pair b = u(q, col);
          u(p, col) = scale(a, c) + scale(cmul(rot, b), -s);
          u(q, col) = scale(cmul(conjugate(rot), a), s) + scale(b, c);
        }
      }
    }
    for (std::size_t r = 0; r < n; ++r) {
      const Pair phase = unit_phasor(rng.phase());
      for (std::size_t col = 0; col < n; ++col) u(r, col) = cmul(phase, u(r, col));
    }
  }
  return u;
}

}  // namespace qcalc
