#pragma once

#include <cstdint>
#include <functional>
#include <random>

namespace heisdens {

/// Seeded Monte Carlo estimate. std_error is the sample standard deviation of
/// the per-sample contributions divided by sqrt(samples).
struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Axis-aligned sampling rectangle [x_lo, x_hi] x [y_lo, y_hi].
struct SampleBox {
  double x_lo = 0.0;
  double x_hi = 1.0;
  double y_lo = 0.0;
  double y_hi = 1.0;

  double measure() const noexcept { return (x_hi - x_lo) * (y_hi - y_lo); }
};

/// Samples per substream. Substream k always consumes the same random numbers,
/// whatever the thread count.
inline constexpr std::uint64_t kSubstreamSize = std::uint64_t{1} << 16;

inline constexpr std::uint64_t kMinMcSamples = 1000;

/// Engine for substream `stream` of a run seeded with `seed`.
std::mt19937_64 substream_engine(std::uint64_t seed, std::uint64_t stream);

/// Uniform double in [0, 1) from the top 53 bits of one engine draw.
inline double uniform01(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

/// Area of {indicator = true} inside `box` by uniform rejection sampling:
/// box measure times hit fraction. Bit-identical for fixed (seed, samples).
McEstimate mc_estimate(const SampleBox& box, const std::function<bool(double, double)>& indicator,
                       std::uint64_t samples, std::uint64_t seed, unsigned threads = 1);

}  // namespace heisdens
