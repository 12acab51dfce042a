#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "heisdens/metric.hpp"
#include "heisdens/numerics/monte_carlo.hpp"

namespace heisdens {

inline constexpr double kDefaultQuadratureTol = 1e-11;
inline constexpr double kDefaultOffsetTol = 1e-8;
inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// Central slice area beta0, the largest slice area beta over offsets b,
/// its location b_star and gamma = beta0 / beta.
struct DensityConstants {
  MetricSpec metric;
  double beta0 = 0.0;
  double beta = 0.0;
  double b_star = 0.0;
  double gamma = 0.0;
  double abs_error = 0.0;  // bound on |gamma - exact|
  double beta0_error = 0.0;
  double beta_error = 0.0;
  double quadrature_tol = kDefaultQuadratureTol;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t samples = 0;
};

struct ConstantsOptions {
  double quadrature_tol = kDefaultQuadratureTol;
  double offset_tol = kDefaultOffsetTol;
  std::size_t scan_points = 512;
  // Recorded in the result; the constants themselves are deterministic.
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t samples = 0;
};

struct Beta0Result {
  double beta0 = 0.0;
  double error = 0.0;
};

struct BetaResult {
  double beta = 0.0;
  double b_star = 0.0;
  double error = 0.0;  // quadrature plus the change of A across the offset tolerance
};

Beta0Result compute_beta0(const MetricSpec& m, double quadrature_tol = kDefaultQuadratureTol);

/// Maximizes A(b) over b in [0, 1] (A is even) by a grid scan and refinement.
BetaResult compute_beta(const MetricSpec& m, const ConstantsOptions& options = {});

DensityConstants compute_gamma(const MetricSpec& m, const ConstantsOptions& options = {});

/// The two SR section integrals in their original per-quadrant form:
///   I0 = int_0^{2 pi} sqrt(2 - 2 cos phi) (2 sin phi - phi cos phi - phi) / phi^4 dphi
///   I1 = int_0^{3 pi / 2} sqrt((2 - 2 cos phi) / phi^2 - b1^2) (2 sin phi - phi cos phi - phi) / phi^3 dphi
/// with b1 = 2 sqrt 2 / (3 pi), so that the slice areas are 8 I0 and 8 I1.
struct MapleReport {
  double i0 = 0.0;
  double i0_error = 0.0;
  double i1 = 0.0;
  double i1_error = 0.0;
  double gap = 0.0;             // i1 - i0
  double combined_error = 0.0;  // i0_error + i1_error
  bool gap_resolved = false;    // gap > 10 * combined_error
  double i0_route_diff = 0.0;   // i0 - beta0 / 8 via the slice-area integrand
  double i1_route_diff = 0.0;   // i1 - A(b1) / 8
  bool routes_agree = false;
  McEstimate mc0;  // Monte Carlo slice areas, divided by 8
  McEstimate mc1;
  bool mc_consistent = false;  // both within 3 sigma
  bool passed = false;
};

inline constexpr double kMapleMaxTol = 1e-9;

MapleReport verify_maple_inequality(double abs_tol = 1e-12, std::uint64_t samples = 1000000,
                                    std::uint64_t seed = kDefaultSeed, unsigned threads = 1);

/// beta = beta0 check for gauges with convex unit balls, plus the Brunn
/// diagnostic: b -> sqrt(A(b)) must be concave on a sample grid.
struct ConvexReport {
  MetricSpec metric;
  double beta0 = 0.0;
  double beta = 0.0;
  double b_star = 0.0;
  double abs_diff = 0.0;
  double combined_error = 0.0;
  double rel_diff = 0.0;
  bool equality_holds = false;  // abs_diff <= 10 combined_error and rel_diff <= 1e-6
  double brunn_max_second_diff = 0.0;
  bool brunn_holds = false;
  bool passed = false;
};

inline constexpr double kConvexRelTol = 1e-6;
inline constexpr double kBrunnTol = 1e-8;
inline constexpr std::size_t kBrunnGrid = 200;

ConvexReport verify_convex_equality(const MetricSpec& m, const ConstantsOptions& options = {});

/// sqrt(A(b)) on kBrunnGrid offsets spread over (-1, 1).
std::vector<double> brunn_profile(const MetricSpec& m, double quadrature_tol,
                                  std::vector<double>* offsets = nullptr);

}  // namespace heisdens
