#pragma once

#include <cstddef>
#include <span>

namespace qcalc {

/// Streaming mean/variance (Welford), mergeable across partitions.
class RunningStats {
 public:
  void add(double x) noexcept;
  void merge(const RunningStats& other) noexcept;

  std::size_t count() const noexcept { return n_; }
  double mean() const noexcept { return mean_; }
  /// Unbiased sample variance; 0 for fewer than two samples.
  double variance() const noexcept;
  double stddev() const noexcept;
  double std_error() const noexcept;

 private:
  std::size_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

/// Kolmogorov-Smirnov distance between the empirical distribution of
/// `samples` and the uniform distribution on [lo, hi).
double ks_distance_uniform(std::span<const double> samples, double lo, double hi);

/// Asymptotic one-sample KS critical value at significance `alpha`.
double ks_critical_value(std::size_t n, double alpha);

}  // namespace qcalc
