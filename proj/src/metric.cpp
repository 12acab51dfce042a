#include "heisdens/metric.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "heisdens/numerics/monte_carlo.hpp"
#include "heisdens/numerics/parallel.hpp"
#include "heisdens/profile.hpp"
#include "heisdens/sphere.hpp"

namespace heisdens {

namespace {

constexpr std::uint64_t kContractChunk = 4096;
constexpr std::uint64_t kStartupTriples = 20000;
constexpr std::uint64_t kStartupSeed = 0x6b6f72616e7969;

double koranyi_norm(double kappa, const GroupPoint& p) {
  const double h2 = p.x * p.x + p.y * p.y;
  return std::sqrt(std::sqrt(h2 * h2 + kappa * p.t * p.t));
}

double box_norm(double c, const GroupPoint& p) {
  return std::max(std::hypot(p.x, p.y), c * std::sqrt(std::abs(p.t)));
}

// Random point with horizontal coordinates of order `scale` and t of order scale^2.
GroupPoint random_point(std::mt19937_64& rng, double scale) {
  const double x = (2.0 * uniform01(rng) - 1.0) * scale;
  const double y = (2.0 * uniform01(rng) - 1.0) * scale;
  const double t = (2.0 * uniform01(rng) - 1.0) * scale * scale;
  return {x, y, t};
}

// Mostly unit-scale points, with some nearly vertical and nearly horizontal
// ones to reach the pole and equator regions of the sphere.
GroupPoint contract_point(std::mt19937_64& rng) {
  GroupPoint p = random_point(rng, 1.0);
  const double pick = uniform01(rng);
  if (pick < 0.1) {
    p.x *= 1e-4;
    p.y *= 1e-4;
  } else if (pick < 0.2) {
    p.t *= 1e-6;
  }
  return p;
}

MetricContractReport merge(MetricContractReport a, const MetricContractReport& b) {
  a.triples += b.triples;
  a.max_triangle_excess = std::max(a.max_triangle_excess, b.max_triangle_excess);
  a.max_homogeneity_error = std::max(a.max_homogeneity_error, b.max_homogeneity_error);
  a.max_invariance_error = std::max(a.max_invariance_error, b.max_invariance_error);
  a.max_symmetry_error = std::max(a.max_symmetry_error, b.max_symmetry_error);
  return a;
}

MetricContractReport contract_chunk(const MetricSpec& m, std::uint64_t seed, std::uint64_t chunk,
                                    std::uint64_t count) {
  auto rng = substream_engine(seed, chunk);
  MetricContractReport rep;
  rep.triples = count;
  for (std::uint64_t i = 0; i < count; ++i) {
    const GroupPoint p = contract_point(rng);
    const GroupPoint q = contract_point(rng);
    const GroupPoint r = contract_point(rng);
    const GroupPoint g = random_point(rng, 1.0);
    // Dilation factors spread over twelve decades.
    const double s = std::pow(10.0, 12.0 * uniform01(rng) - 6.0);

    const double pq = metric_distance(m, p, q);
    const double qr = metric_distance(m, q, r);
    const double pr = metric_distance(m, p, r);
    // Triangle slack is relative to the length of the detour.
    const double detour = std::max(pq + qr, 1.0);
    rep.max_triangle_excess = std::max(rep.max_triangle_excess, (pr - pq - qr) / detour);

    const double scaled = metric_distance(m, dilate(s, p), dilate(s, q));
    if (pq > 0.0) {
      rep.max_homogeneity_error =
          std::max(rep.max_homogeneity_error, std::abs(scaled - s * pq) / (s * pq));
    }

    const double moved = metric_distance(m, group_multiply(g, p), group_multiply(g, q));
    rep.max_invariance_error = std::max(rep.max_invariance_error, std::abs(moved - pq));

    rep.max_symmetry_error =
        std::max(rep.max_symmetry_error, std::abs(metric_distance(m, q, p) - pq));
  }
  return rep;
}

}  // namespace

void MetricSpec::validate() const {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw std::invalid_argument("metric: kappa must be positive and finite");
  }
  if (!(box_c > 0.0) || !std::isfinite(box_c)) {
    throw std::invalid_argument("metric: box_c must be positive and finite");
  }
}

std::string_view metric_name(MetricKind kind) noexcept {
  switch (kind) {
    case MetricKind::SR:
      return "sr";
    case MetricKind::Koranyi:
      return "koranyi";
    case MetricKind::Box:
      return "box";
  }
  return "unknown";
}

MetricKind parse_metric_kind(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "sr") return MetricKind::SR;
  if (lower == "koranyi") return MetricKind::Koranyi;
  if (lower == "box") return MetricKind::Box;
  throw std::invalid_argument("unknown metric '" + std::string(name) + "'");
}

double metric_norm(const MetricSpec& m, const GroupPoint& p) {
  if (!is_finite(p)) {
    throw std::invalid_argument("metric_norm: non-finite point");
  }
  switch (m.kind) {
    case MetricKind::SR:
      return sr_norm(p);
    case MetricKind::Koranyi:
      return koranyi_norm(m.kappa, p);
    case MetricKind::Box:
      return box_norm(m.box_c, p);
  }
  throw std::logic_error("metric_norm: bad metric kind");
}

double metric_distance(const MetricSpec& m, const GroupPoint& p, const GroupPoint& q) {
  return metric_norm(m, group_multiply(group_inverse(p), q));
}

bool ball_contains(const MetricSpec& m, double r, const GroupPoint& p) {
  if (!(r > 0.0)) {
    throw std::invalid_argument("ball_contains: radius must be positive");
  }
  return metric_norm(m, p) <= r;
}

double unit_ball_height(const MetricSpec& m) {
  m.validate();
  switch (m.kind) {
    case MetricKind::SR:
      return 2.0 / kPi;
    case MetricKind::Koranyi:
      return 1.0 / std::sqrt(m.kappa);
    case MetricKind::Box:
      return 1.0 / (m.box_c * m.box_c);
  }
  throw std::logic_error("unit_ball_height: bad metric kind");
}

bool has_convex_unit_ball(const MetricSpec& m) noexcept { return m.kind != MetricKind::SR; }

MetricContractReport check_metric_contract(const MetricSpec& m, std::uint64_t triples,
                                           std::uint64_t seed, unsigned threads) {
  m.validate();
  const std::uint64_t chunks = (triples + kContractChunk - 1) / kContractChunk;
  auto parts = parallel_map(chunks, threads, [&](std::size_t k) {
    const std::uint64_t begin = k * kContractChunk;
    const std::uint64_t count = std::min(kContractChunk, triples - begin);
    return contract_chunk(m, seed, k, count);
  });
  MetricContractReport total;
  for (const auto& part : parts) {
    total = merge(total, part);
  }
  total.passed = total.max_triangle_excess <= kTriangleSlack &&
                 total.max_homogeneity_error <= kHomogeneityTol &&
                 total.max_invariance_error <= kInvarianceTol &&
                 total.max_symmetry_error <= kInvarianceTol;
  return total;
}

void require_metric_contract(const MetricSpec& m) {
  m.validate();
  if (m.kind == MetricKind::SR) {
    return;
  }
  const auto rep = check_metric_contract(m, kStartupTriples, kStartupSeed);
  if (!rep.passed) {
    std::ostringstream msg;
    msg << metric_name(m.kind) << " (kappa " << m.kappa << ", box_c " << m.box_c
        << ") is not a homogeneous distance: triangle excess " << rep.max_triangle_excess
        << ", homogeneity error " << rep.max_homogeneity_error;
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace heisdens
