#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "heisdens/group.hpp"
#include "heisdens/metric.hpp"
#include "heisdens/numerics/monte_carlo.hpp"

namespace heisdens {

/// One boundary sample of a slice: the curve parameter (phi for SR, an angle
/// otherwise) and the point (x, z) of the plane {y = b}.
struct CurvePoint {
  double param = 0.0;
  double x = 0.0;
  double z = 0.0;
};

/// Section D_b = B ∩ {y = b} of a unit ball, seen in (x, t) coordinates.
struct SliceSection {
  MetricSpec metric;
  double b = 0.0;
  std::optional<double> phi_max;  // SR only
  double area = 0.0;
  double area_error = 0.0;
  std::vector<CurvePoint> curve;  // closed loop, counter-clockwise
};

inline constexpr std::size_t kDefaultCurvePoints = 256;

/// The phi in [0, 2 pi] with R(phi) = b, for b in [0, 1].
double phi_max(double b);

/// sqrt(max(R(phi)^2 - b^2, 0)).
double slice_half_width(double phi, double b);

/// SR slice area A(b) = 8 int_0^{phi_max} sqrt(R^2 - b^2) D(phi) dphi with D
/// the profile half slope. |b| >= 1 gives the empty slice.
SliceSection sr_slice_area(double b, double abs_tol, std::size_t curve_points = kDefaultCurvePoints);

/// dA/db for the SR slices, b in [0, 1):
///   -8 b int_0^{phi_max} D(phi) / sqrt(R^2 - b^2) dphi.
/// The endpoint term vanishes with the half width.
double sr_slice_area_slope(double b, double abs_tol);

/// Korányi slice {((x^2 + b^2)^2 + kappa t^2)^{1/4} <= 1}.
SliceSection koranyi_slice_area(double b, double kappa, double abs_tol,
                                std::size_t curve_points = kDefaultCurvePoints);

/// Box slice, the rectangle |x| <= sqrt(1 - b^2), |t| <= 1 / c^2.
SliceSection box_slice_area(double b, double box_c, std::size_t curve_points = kDefaultCurvePoints);

/// Dispatches on the metric kind. The area is even in b.
SliceSection slice_area(const MetricSpec& m, double b, double abs_tol,
                        std::size_t curve_points = kDefaultCurvePoints);

/// Half height of D_b above abscissa x: the section is {|t| <= H}. Returns a
/// negative value when (x, b) lies outside the unit ball's horizontal disc.
double section_half_height(const MetricSpec& m, double b, double x);

/// Fast exact membership in the closed SR ball of radius r. Interpolates the
/// ball height from a table and falls back to sr_norm near the boundary.
bool sr_ball_contains_fast(double r, const GroupPoint& p);

inline constexpr std::uint64_t kMinSliceSamples = 10000;

/// Rejection-sampling area of B(0, radius) ∩ {y = b} over the bounding box
/// [-radius, radius] x [-radius^2 h, radius^2 h], h the unit-ball height.
McEstimate mc_slice_area(const MetricSpec& m, double b, std::uint64_t samples, std::uint64_t seed,
                         unsigned threads = 1, double radius = 1.0);

/// Unit sphere mesh on an (n_psi x n_phi) grid of the hemisphere map, plus the
/// mirrored lower half. Vertices are stored row by row; rows run over phi.
/// The upper rows go from the equator (phi = 0) to the pole; the lower rows
/// mirror them without repeating the equator.
struct BallMesh {
  MetricSpec metric;
  std::size_t n_psi = 0;
  std::size_t n_phi = 0;
  std::vector<GroupPoint> vertices;
  std::vector<std::array<std::size_t, 3>> triangles;  // zero-based
};

BallMesh export_ball_mesh(const MetricSpec& m, std::size_t n_psi, std::size_t n_phi);

/// Writers. CSV columns: x,y,t (mesh) and phi,x,z (curve).
std::string mesh_to_obj(const BallMesh& mesh);
std::string mesh_to_csv(const BallMesh& mesh);
std::string curve_to_csv(const SliceSection& section);

}  // namespace heisdens
