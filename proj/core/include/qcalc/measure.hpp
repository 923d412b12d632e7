#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qcalc/matrix.hpp"

namespace qcalc {

/// Signed quantities behave like charge; NonNegative ones like mass.
enum class Signedness { Signed, NonNegative };

/// An object quantified by an n-tuple of reals, combined component-wise.
///
/// Unit labels are optional; when present there is one per component and two
/// measures only combine when their labels agree. A NonNegative measure has
/// no negative component, and keeps that property under combination.
class Measure {
 public:
  explicit Measure(std::vector<double> components,
                   Signedness signedness = Signedness::Signed,
                   std::vector<std::string> unit_labels = {});

  static Measure scalar(double value, Signedness signedness = Signedness::Signed);

  std::size_t dimension() const noexcept { return components_.size(); }
  double operator[](std::size_t i) const { return components_.at(i); }
  std::span<const double> components() const noexcept { return components_; }
  const std::vector<std::string>& unit_labels() const noexcept { return unit_labels_; }
  Signedness signedness() const noexcept { return signedness_; }
  bool single_signed() const noexcept { return signedness_ == Signedness::NonNegative; }

  friend bool operator==(const Measure&, const Measure&) = default;

 private:
  std::vector<double> components_;
  Signedness signedness_;
  std::vector<std::string> unit_labels_;
};

/// a (+) b. Rejects differing dimension, unit labels or signedness.
Measure combine(const Measure& a, const Measure& b);

inline Measure operator+(const Measure& a, const Measure& b) { return combine(a, b); }

/// count copies of a, built as (k+1)a = (ka) (+) a.
Measure repeat(const Measure& a, unsigned count);

/// T * a for a non-singular n x n matrix T (|det T| > singular_tol).
Measure shear(const Measure& a, const Matrix& transform, double singular_tol = 1e-12);

/// Component-wise equality within `rel_tol` of the larger magnitude.
bool approx_equal(const Measure& a, const Measure& b, double rel_tol = 1e-9);

/// Whether m copies of x are equivalent to n copies of y, i.e.
/// |m x - n y| <= rel_tol * max(|m x|, |n y|). Scalars only; m, n >= 1.
bool commensurable(const Measure& x, const Measure& y, unsigned m, unsigned n,
                   double rel_tol = 1e-9);

}  // namespace qcalc
