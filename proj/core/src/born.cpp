#include "qcalc/born.hpp"

#include <cmath>
#include <string>

#include "qcalc/errors.hpp"
#include "qcalc/stats.hpp"

namespace qcalc {
namespace {

constexpr double kBracketLow = 0.0;
constexpr double kBracketHigh = 8.0;

bool closed_form_is_monotone() {
  double prev = mean_rate_closed(kBracketLow);
  for (int step = 1; step <= 800; ++step) {
    const double next = mean_rate_closed(kBracketLow + step * (kBracketHigh - kBracketLow) / 800.0);
    if (!(next > prev)) return false;
    prev = next;
  }
  return true;
}

}  // namespace

RateModel::RateModel(double rate) : rate_(rate) {
  if (!(std::isfinite(rate) && rate > 0.0)) {
    throw DomainError("RateModel: rate must be finite and positive, got " + std::to_string(rate));
  }
}

double mean_rate_closed(double alpha) {
  if (!(alpha > -1.0) || !std::isfinite(alpha)) {
    throw DomainError("mean_rate_closed: alpha must exceed -1 (Gamma pole), got " +
                      std::to_string(alpha));
  }
  return std::exp(std::lgamma(alpha + 1.0) - 2.0 * std::lgamma(0.5 * alpha + 1.0));
}

McEstimate mean_rate_mc(double alpha, std::size_t n_samples, Seed seed, unsigned threads) {
  if (n_samples == 0) throw DomainError("mean_rate_mc: n_samples must be at least 1");
  std::vector<RunningStats> partial(chunk_count(n_samples));
  const double half = 0.5 * alpha;
  for_each_chunk(n_samples, seed, threads,
                 [&](std::size_t chunk, std::size_t begin, std::size_t end, Rng& rng) {
                   RunningStats& acc = partial[chunk];
                   for (std::size_t s = begin; s < end; ++s) {
                     const PhaseSample p = PhaseSample::draw(rng);
                     // |e^{i theta} + e^{i phi}|^2 = 2 + 2 cos(theta - phi)
                     const double modulus2 = std::max(0.0, 2.0 + 2.0 * std::cos(p.theta - p.phi));
                     acc.add(std::pow(modulus2, half));
                   }
                 });
  RunningStats total;
  for (const auto& p : partial) total.merge(p);
  return {total.mean(), total.std_error(), total.count()};
}

double solve_alpha(double target, double tol) {
  static const bool monotone = closed_form_is_monotone();
  if (!monotone) throw Error("solve_alpha: closed form is not monotone on the bracket");

  double lo = kBracketLow;
  double hi = kBracketHigh;
  const double f_lo = mean_rate_closed(lo);
  const double f_hi = mean_rate_closed(hi);
  if (!(target >= f_lo - tol && target <= f_hi + tol)) {
    throw DomainError("solve_alpha: target " + std::to_string(target) + " is outside [" +
                      std::to_string(f_lo) + ", " + std::to_string(f_hi) + "]");
  }
  if (std::abs(f_lo - target) <= tol) return lo;
  if (std::abs(f_hi - target) <= tol) return hi;

  // Bisect to exhaustion of double precision, then keep the better endpoint.
  for (;;) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (mean_rate_closed(mid) < target ? lo : hi) = mid;
  }
  const double best =
      std::abs(mean_rate_closed(lo) - target) <= std::abs(mean_rate_closed(hi) - target) ? lo : hi;
  const double miss = std::abs(mean_rate_closed(best) - target);
  if (miss > tol) {
    throw Error("solve_alpha: bisection stalled " + std::to_string(miss) + " from the target");
  }
  return best;
}

std::vector<Pair> sample_prior(const RateModel& model, std::size_t n, Seed seed, unsigned threads) {
  if (n == 0) throw DomainError("sample_prior: n must be at least 1");
  std::vector<Pair> out(n);
  const double sd = std::sqrt(0.5 * model.rate());
  for_each_chunk(n, seed, threads, [&](std::size_t, std::size_t begin, std::size_t end, Rng& rng) {
    for (std::size_t s = begin; s < end; ++s) {
      out[s].c1 = rng.normal(0.0, sd);
      out[s].c2 = rng.normal(0.0, sd);
    }
  });
  return out;
}

std::vector<double> poisson_stream(const RateModel& model, double duration, Seed seed) {
  if (!(std::isfinite(duration) && duration > 0.0)) {
    throw DomainError("poisson_stream: duration must be finite and positive");
  }
  Rng rng(seed);
  const double mean_gap = 1.0 / model.rate();
  std::vector<double> times;
  for (double t = rng.exponential(mean_gap); t < duration; t += rng.exponential(mean_gap)) {
    times.push_back(t);
  }
  return times;
}

}  // namespace qcalc
