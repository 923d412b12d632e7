#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <thread>
#include <vector>

namespace qcalc {

using Seed = std::uint64_t;

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Seed of the independent sub-stream `stream` of `base`.
constexpr Seed derive_seed(Seed base, std::uint64_t stream) noexcept {
  return mix64(base ^ mix64(stream + 0xD1B54A32D192ED03ull));
}

/// Seeded random stream. Same seed on the same platform gives the same draws.
class Rng {
 public:
  explicit Rng(Seed seed) : engine_(mix64(seed)) {}

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform on [0, 2pi).
  double phase() { return 2.0 * std::numbers::pi * uniform(); }
  double normal(double mean, double stddev) { return mean + stddev * std_normal_(engine_); }
  double exponential(double mean) { return -mean * std::log1p(-uniform()); }

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> std_normal_{0.0, 1.0};
};

inline constexpr std::size_t kChunkSize = std::size_t{1} << 16;

inline std::size_t chunk_count(std::size_t count) noexcept {
  return (count + kChunkSize - 1) / kChunkSize;
}

/// Runs fn(chunk, begin, end, rng) over fixed-size chunks of [0, count).
///
/// Chunk c always draws from derive_seed(seed, c), so results do not depend on
/// the number of threads as long as the caller merges per-chunk results in
/// chunk order. fn must only touch state owned by its chunk.
template <class Fn>
void for_each_chunk(std::size_t count, Seed seed, unsigned threads, Fn&& fn) {
  const std::size_t chunks = chunk_count(count);
  auto run_chunk = [&](std::size_t c) {
    Rng rng(derive_seed(seed, c));
    const std::size_t begin = c * kChunkSize;
    fn(c, begin, std::min(count, begin + kChunkSize), rng);
  };
  const unsigned workers = static_cast<unsigned>(
      std::min<std::size_t>(std::max(1u, threads), chunks));
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) run_chunk(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t c = next++; c < chunks; c = next++) run_chunk(c);
    });
  }
}

}  // namespace qcalc
