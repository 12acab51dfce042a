#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "heisdens/group.hpp"

namespace heisdens {

enum class MetricKind { SR, Koranyi, Box };

/// A homogeneous distance d(p, q) = N(p^{-1} q) given by one of three gauges:
///   SR       the sub-Riemannian norm (sr_norm)
///   Koranyi  ((x^2 + y^2)^2 + kappa t^2)^{1/4}
///   Box      max(sqrt(x^2 + y^2), box_c sqrt|t|)
/// kappa and box_c are ignored by the gauges that do not use them.
struct MetricSpec {
  MetricKind kind = MetricKind::SR;
  double kappa = 1.0;
  double box_c = 1.0;

  /// Throws std::invalid_argument unless kappa and box_c are positive and finite.
  void validate() const;

  bool operator==(const MetricSpec&) const = default;
};

std::string_view metric_name(MetricKind kind) noexcept;

/// Parses "sr", "koranyi" or "box" (case-insensitive).
MetricKind parse_metric_kind(std::string_view name);

/// Gauge N(p) = d(0, p).
double metric_norm(const MetricSpec& m, const GroupPoint& p);

double metric_distance(const MetricSpec& m, const GroupPoint& p, const GroupPoint& q);

/// True iff d(0, p) <= r.
bool ball_contains(const MetricSpec& m, double r, const GroupPoint& p);

/// Largest |t| on the unit ball: 2/pi (SR), 1/sqrt(kappa), 1/box_c^2.
/// The largest horizontal radius is 1 for all three gauges.
double unit_ball_height(const MetricSpec& m);

/// Whether the unit ball is a convex subset of R^3.
bool has_convex_unit_ball(const MetricSpec& m) noexcept;

/// Worst deviations seen while sampling the homogeneous-distance axioms.
struct MetricContractReport {
  std::uint64_t triples = 0;
  double max_triangle_excess = 0.0;     // max of d(p,r) - d(p,q) - d(q,r)
  double max_homogeneity_error = 0.0;   // relative |d(sp, sq) - s d(p, q)|
  double max_invariance_error = 0.0;    // |d(gp, gq) - d(p, q)|
  double max_symmetry_error = 0.0;      // |d(p, q) - d(q, p)|
  bool passed = false;
};

inline constexpr double kTriangleSlack = 1e-12;
inline constexpr double kHomogeneityTol = 1e-10;
inline constexpr double kInvarianceTol = 1e-12;

/// Samples `triples` random triples (plus a random dilation and translation
/// per triple) and checks triangle inequality, homogeneity, left-invariance
/// and symmetry. Points mix unit-scale and strongly dilated configurations.
MetricContractReport check_metric_contract(const MetricSpec& m, std::uint64_t triples,
                                           std::uint64_t seed, unsigned threads = 1);

/// Startup guard for computations that use a gauge with free parameters:
/// runs a short contract check and throws std::invalid_argument on violation.
/// The SR distance is accepted without sampling.
void require_metric_contract(const MetricSpec& m);

}  // namespace heisdens
