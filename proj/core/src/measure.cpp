#include "qcalc/measure.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "qcalc/errors.hpp"

namespace qcalc {
namespace {

bool close(double a, double b, double rel_tol) {
  return std::abs(a - b) <= rel_tol * std::max(std::abs(a), std::abs(b));
}

}  // namespace

Measure::Measure(std::vector<double> components, Signedness signedness,
                 std::vector<std::string> unit_labels)
    : components_(std::move(components)),
      signedness_(signedness),
      unit_labels_(std::move(unit_labels)) {
  if (components_.empty()) throw DomainError("Measure: dimension must be at least 1");
  if (!unit_labels_.empty() && unit_labels_.size() != components_.size()) {
    throw DimensionMismatch("Measure: " + std::to_string(unit_labels_.size()) +
                            " unit labels for dimension " +
                            std::to_string(components_.size()));
  }
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (!std::isfinite(components_[i])) {
      throw DomainError("Measure: component " + std::to_string(i) + " is not finite");
    }
    if (single_signed() && components_[i] < 0.0) {
      throw DomainError("Measure: component " + std::to_string(i) +
                        " is negative in a non-negative measure");
    }
  }
}

Measure Measure::scalar(double value, Signedness signedness) {
  return Measure({value}, signedness);
}

Measure combine(const Measure& a, const Measure& b) {
  if (a.dimension() != b.dimension()) {
    throw DimensionMismatch("combine: dimensions differ (" + std::to_string(a.dimension()) +
                            " vs " + std::to_string(b.dimension()) + ")");
  }
  if (a.unit_labels() != b.unit_labels()) throw DimensionMismatch("combine: unit labels differ");
  if (a.signedness() != b.signedness()) {
    throw DomainError("combine: cannot combine a signed with a non-negative measure");
  }
  std::vector<double> sum(a.dimension());
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = a[i] + b[i];
  return Measure(std::move(sum), a.signedness(), a.unit_labels());
}

Measure repeat(const Measure& a, unsigned count) {
  if (count == 0) throw DomainError("repeat: count must be at least 1");
  Measure total = a;
  for (unsigned k = 1; k < count; ++k) total = combine(total, a);
  return total;
}

Measure shear(const Measure& a, const Matrix& transform, double singular_tol) {
  if (!transform.square() || transform.rows() != a.dimension()) {
    throw DimensionMismatch("shear: transform is " + std::to_string(transform.rows()) + "x" +
                            std::to_string(transform.cols()) + " but measure has dimension " +
                            std::to_string(a.dimension()));
  }
  const double det = transform.determinant();
  if (!(std::abs(det) > singular_tol)) {
    throw SingularTransform("shear: transform is singular (det = " + std::to_string(det) + ")");
  }
  // A non-negative transform maps the positive orthant into itself; any other
  // transform produces a signed measure. Decided by T alone so that shear
  // stays a homomorphism for (+).
  bool keeps_sign = a.single_signed();
  for (std::size_t r = 0; r < transform.rows() && keeps_sign; ++r) {
    for (std::size_t c = 0; c < transform.cols(); ++c) keeps_sign = keeps_sign && transform(r, c) >= 0.0;
  }
  return Measure(transform.apply(a.components()),
                 keeps_sign ? Signedness::NonNegative : Signedness::Signed, a.unit_labels());
}

bool approx_equal(const Measure& a, const Measure& b, double rel_tol) {
  if (a.dimension() != b.dimension()) return false;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    if (!close(a[i], b[i], rel_tol)) return false;
  }
  return true;
}

bool commensurable(const Measure& x, const Measure& y, unsigned m, unsigned n, double rel_tol) {
  if (x.dimension() != 1 || y.dimension() != 1) {
    throw DimensionMismatch("commensurable: needs scalar measures, got dimensions " +
                            std::to_string(x.dimension()) + " and " +
                            std::to_string(y.dimension()));
  }
  if (m == 0 || n == 0) throw DomainError("commensurable: multiplicities must be positive");
  return close(static_cast<double>(m) * x[0], static_cast<double>(n) * y[0], rel_tol);
}

}  // namespace qcalc
