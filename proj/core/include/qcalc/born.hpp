#pragma once

#include <cstddef>
#include <vector>

#include "qcalc/pair.hpp"
#include "qcalc/random.hpp"

namespace qcalc {

/// Mean Poisson rate r > 0 (events per unit time).
class RateModel {
 public:
  explicit RateModel(double rate);
  double rate() const noexcept { return rate_; }

 private:
  double rate_;
};

/// Two independent uniform phases on [0, 2pi).
struct PhaseSample {
  double theta = 0.0;
  double phi = 0.0;

  static PhaseSample draw(Rng& rng) { return {rng.phase(), rng.phase()}; }
};

/// Observable rate p(x) = |x|^2.
constexpr double born(Pair x) noexcept { return x.c1 * x.c1 + x.c2 * x.c2; }

/// <|e^{i theta} + e^{i phi}|^alpha> = Gamma(alpha + 1) / Gamma(alpha/2 + 1)^2,
/// evaluated through log-gamma. alpha > -1.
double mean_rate_closed(double alpha);

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
};

/// Monte Carlo mean of (2 + 2 cos(theta - phi))^(alpha/2) over uniform phases.
/// The result depends only on (alpha, n_samples, seed), not on `threads`.
McEstimate mean_rate_mc(double alpha, std::size_t n_samples, Seed seed, unsigned threads = 1);

/// Exponent alpha in [0, 8] with mean_rate_closed(alpha) == target, by
/// bisection. target must lie in [1, 70], the image of that bracket.
double solve_alpha(double target = 2.0, double tol = 1e-10);

/// Draws from the complex Gaussian prior (1 / pi r) exp(-|x|^2 / r): each
/// component N(0, r/2), so born(x) is exponential with mean r and the phase
/// is uniform.
std::vector<Pair> sample_prior(const RateModel& model, std::size_t n, Seed seed,
                               unsigned threads = 1);

/// Event times of a Poisson process on [0, duration), ascending, built from
/// exponential inter-arrival gaps.
std::vector<double> poisson_stream(const RateModel& model, double duration, Seed seed);

}  // namespace qcalc
