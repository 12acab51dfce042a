#include "heisdens/numerics/monte_carlo.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "heisdens/numerics/parallel.hpp"

namespace heisdens {

std::mt19937_64 substream_engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    0x68656973u};
  return std::mt19937_64(seq);
}

McEstimate mc_estimate(const SampleBox& box, const std::function<bool(double, double)>& indicator,
                       std::uint64_t samples, std::uint64_t seed, unsigned threads) {
  if (samples < kMinMcSamples) {
    throw std::invalid_argument("mc_estimate: need at least 1000 samples");
  }
  if (!(box.x_hi > box.x_lo) || !(box.y_hi > box.y_lo)) {
    throw std::invalid_argument("mc_estimate: degenerate sampling box");
  }

  const std::uint64_t streams = (samples + kSubstreamSize - 1) / kSubstreamSize;
  const double wx = box.x_hi - box.x_lo;
  const double wy = box.y_hi - box.y_lo;

  const auto hits = parallel_map(static_cast<std::size_t>(streams), threads, [&](std::size_t k) {
    auto engine = substream_engine(seed, k);
    const std::uint64_t begin = static_cast<std::uint64_t>(k) * kSubstreamSize;
    const std::uint64_t end = std::min(samples, begin + kSubstreamSize);
    std::uint64_t count = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
      const double x = box.x_lo + wx * uniform01(engine);
      const double y = box.y_lo + wy * uniform01(engine);
      count += indicator(x, y) ? 1 : 0;
    }
    return count;
  });

  const std::uint64_t total = std::accumulate(hits.begin(), hits.end(), std::uint64_t{0});
  const double n = static_cast<double>(samples);
  const double p = static_cast<double>(total) / n;
  const double measure = box.measure();
  // Sample variance of Bernoulli(p) contributions, scaled by the box measure.
  const double variance = p * (1.0 - p) * n / (n - 1.0);
  return McEstimate{measure * p, measure * std::sqrt(variance / n), samples, seed};
}

}  // namespace heisdens
