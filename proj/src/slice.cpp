#include "heisdens/slice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "heisdens/numerics/quadrature.hpp"
#include "heisdens/profile.hpp"
#include "heisdens/sphere.hpp"

namespace heisdens {

namespace {

// Interpolation table for the SR ball height h(R) in the variable w = sqrt(1 - R),
// in which h is smooth at both ends (h ~ w near the rim, linear in R at the axis).
class HeightTable {
 public:
  static const HeightTable& instance() {
    static const HeightTable table;
    return table;
  }

  double guard() const noexcept { return guard_; }

  double height(double radial) const {
    const double w = std::sqrt(std::max(0.0, 1.0 - radial));
    const double pos = w * static_cast<double>(kNodes - 1);
    const std::size_t k = std::min(static_cast<std::size_t>(pos), kNodes - 3);
    const std::size_t k0 = k == 0 ? 0 : k - 1;
    const double s = pos - static_cast<double>(k0);
    // Four-point Lagrange on nodes k0 .. k0 + 3.
    const double* h = &values_[k0];
    const double l0 = -(s - 1.0) * (s - 2.0) * (s - 3.0) / 6.0;
    const double l1 = s * (s - 2.0) * (s - 3.0) / 2.0;
    const double l2 = -s * (s - 1.0) * (s - 3.0) / 2.0;
    const double l3 = s * (s - 1.0) * (s - 2.0) / 6.0;
    return l0 * h[0] + l1 * h[1] + l2 * h[2] + l3 * h[3];
  }

 private:
  static constexpr std::size_t kNodes = 4097;

  HeightTable() : values_(kNodes) {
    for (std::size_t i = 0; i < kNodes; ++i) {
      const double w = static_cast<double>(i) / static_cast<double>(kNodes - 1);
      values_[i] = sr_ball_height(1.0 - w * w);
    }
    // Measured interpolation error at cell midpoints, with a wide margin.
    double worst = 0.0;
    for (std::size_t i = 0; i + 1 < kNodes; ++i) {
      const double w = (static_cast<double>(i) + 0.5) / static_cast<double>(kNodes - 1);
      const double radial = 1.0 - w * w;
      worst = std::max(worst, std::abs(height(radial) - sr_ball_height(radial)));
    }
    guard_ = std::max(1e3 * worst, 1e-9);
  }

  std::vector<double> values_;
  double guard_ = 0.0;
};

double require_offset(double b) {
  if (!std::isfinite(b)) {
    throw std::invalid_argument("slice: offset must be finite");
  }
  return std::abs(b);
}

// Closed counter-clockwise loop from the first-quadrant arc, which must start
// on the positive x-axis and end on the positive z-axis.
std::vector<CurvePoint> mirror_quadrant(const std::vector<CurvePoint>& arc) {
  std::vector<CurvePoint> loop;
  if (arc.empty()) {
    return loop;
  }
  loop.reserve(4 * arc.size());
  for (const auto& p : arc) {
    loop.push_back(p);
  }
  for (std::size_t i = arc.size() - 1; i-- > 0;) {
    loop.push_back({arc[i].param, -arc[i].x, arc[i].z});
  }
  for (std::size_t i = 1; i < arc.size(); ++i) {
    loop.push_back({arc[i].param, -arc[i].x, -arc[i].z});
  }
  for (std::size_t i = arc.size() - 1; i-- > 1;) {
    loop.push_back({arc[i].param, arc[i].x, -arc[i].z});
  }
  return loop;
}

std::size_t arc_points(std::size_t curve_points) {
  return std::max<std::size_t>(curve_points / 4, 2) + 1;
}

SliceSection empty_section(const MetricSpec& m, double b) {
  SliceSection s;
  s.metric = m;
  s.b = b;
  return s;
}

// Profile of the unit sphere for the convex gauges, s in [0, 1] from the
// equator to the pole.
std::pair<double, double> convex_profile(const MetricSpec& m, double s) {
  if (m.kind == MetricKind::Koranyi) {
    const double a = 0.5 * kPi * s;
    return {std::sqrt(std::cos(a)), std::sin(a) / std::sqrt(m.kappa)};
  }
  // Box: up the side R = 1, then across the top.
  const double top = 1.0 / (m.box_c * m.box_c);
  if (s <= 0.5) {
    return {1.0, 2.0 * s * top};
  }
  return {2.0 * (1.0 - s), top};
}

}  // namespace

double phi_max(double b) {
  if (!(b >= 0.0 && b <= 1.0)) {
    throw std::invalid_argument("phi_max: offset must lie in [0, 1]");
  }
  return profile_radial_inverse(b);
}

double slice_half_width(double phi, double b) {
  const double r = profile_radial(phi);
  const double ab = std::abs(b);
  return std::sqrt(std::max((r - ab) * (r + ab), 0.0));
}

SliceSection sr_slice_area(double b, double abs_tol, std::size_t curve_points) {
  const double ab = require_offset(b);
  if (!(abs_tol > 0.0)) {
    throw std::invalid_argument("sr_slice_area: tolerance must be positive");
  }
  SliceSection section = empty_section(MetricSpec{}, b);
  if (ab >= 1.0) {
    if (ab == 1.0) {
      section.phi_max = 0.0;
    }
    return section;
  }
  const double top = phi_max(ab);
  section.phi_max = top;

  // phi = top - s^2 absorbs the square-root zero of the half width at top.
  auto integrand = [top, ab](double s) {
    const double phi = std::max(top - s * s, 0.0);
    return 16.0 * s * slice_half_width(phi, ab) * profile_half_slope(phi);
  };
  const auto q = integrate_adaptive(integrand, 0.0, std::sqrt(top), abs_tol);
  section.area = q.value;
  section.area_error = q.abs_error_estimate;

  const std::size_t n = arc_points(curve_points);
  std::vector<CurvePoint> arc;
  arc.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double phi = i + 1 == n ? top : top * static_cast<double>(i) / static_cast<double>(n - 1);
    arc.push_back({phi, slice_half_width(phi, ab), profile_height(phi)});
  }
  arc.back().x = 0.0;
  section.curve = mirror_quadrant(arc);
  return section;
}

double sr_slice_area_slope(double b, double abs_tol) {
  const double ab = require_offset(b);
  if (!(ab < 1.0)) {
    throw std::invalid_argument("sr_slice_area_slope: offset must lie in [0, 1)");
  }
  if (ab == 0.0) {
    return 0.0;
  }
  const double top = phi_max(ab);
  // The same substitution turns the inverse square root into a bounded factor.
  auto integrand = [top, ab](double s) {
    const double phi = std::max(top - s * s, 0.0);
    const double width = slice_half_width(phi, ab);
    return width > 0.0 ? 2.0 * s * profile_half_slope(phi) / width : 0.0;
  };
  const double scale = 8.0 * ab;
  const auto q = integrate_adaptive(integrand, 0.0, std::sqrt(top), abs_tol / scale);
  const double slope = -scale * q.value;
  return b < 0.0 ? -slope : slope;
}

SliceSection koranyi_slice_area(double b, double kappa, double abs_tol, std::size_t curve_points) {
  const double ab = require_offset(b);
  MetricSpec m{MetricKind::Koranyi, kappa, 1.0};
  m.validate();
  if (!(abs_tol > 0.0)) {
    throw std::invalid_argument("koranyi_slice_area: tolerance must be positive");
  }
  SliceSection section = empty_section(m, b);
  if (ab >= 1.0) {
    return section;
  }
  // x = X sin(theta) with X = sqrt(1 - b^2) turns 1 - (x^2 + b^2)^2 into
  // X^2 cos^2(theta) (1 + b^2 + X^2 sin^2(theta)).
  const double big_x2 = (1.0 - ab) * (1.0 + ab);
  const double big_x = std::sqrt(big_x2);
  const double scale = 4.0 / std::sqrt(kappa);
  auto integrand = [=](double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return scale * big_x2 * c * c * std::sqrt(1.0 + ab * ab + big_x2 * s * s);
  };
  const auto q = integrate_adaptive(integrand, 0.0, 0.5 * kPi, abs_tol);
  section.area = q.value;
  section.area_error = q.abs_error_estimate;

  const std::size_t n = arc_points(curve_points);
  std::vector<CurvePoint> arc;
  arc.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double a = 0.5 * kPi * static_cast<double>(i) / static_cast<double>(n - 1);
    const double theta = 0.5 * kPi - a;
    const double x = big_x * std::sin(theta);
    const double z = big_x * std::cos(theta) *
                     std::sqrt((1.0 + ab * ab + big_x2 * std::sin(theta) * std::sin(theta)) / kappa);
    arc.push_back({a, i + 1 == n ? 0.0 : x, z});
  }
  section.curve = mirror_quadrant(arc);
  return section;
}

SliceSection box_slice_area(double b, double box_c, std::size_t curve_points) {
  const double ab = require_offset(b);
  MetricSpec m{MetricKind::Box, 1.0, box_c};
  m.validate();
  SliceSection section = empty_section(m, b);
  if (ab >= 1.0) {
    return section;
  }
  const double half_width = std::sqrt((1.0 - ab) * (1.0 + ab));
  const double top = 1.0 / (box_c * box_c);
  section.area = 4.0 * half_width * top;

  const std::size_t n = arc_points(curve_points);
  std::vector<CurvePoint> arc;
  arc.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double s = static_cast<double>(i) / static_cast<double>(n - 1);
    const double x = s <= 0.5 ? half_width : 2.0 * (1.0 - s) * half_width;
    const double z = s <= 0.5 ? 2.0 * s * top : top;
    arc.push_back({s, x, z});
  }
  section.curve = mirror_quadrant(arc);
  return section;
}

SliceSection slice_area(const MetricSpec& m, double b, double abs_tol, std::size_t curve_points) {
  m.validate();
  switch (m.kind) {
    case MetricKind::SR:
      return sr_slice_area(b, abs_tol, curve_points);
    case MetricKind::Koranyi:
      return koranyi_slice_area(b, m.kappa, abs_tol, curve_points);
    case MetricKind::Box:
      return box_slice_area(b, m.box_c, curve_points);
  }
  throw std::logic_error("slice_area: bad metric kind");
}

double section_half_height(const MetricSpec& m, double b, double x) {
  const double radial = std::hypot(x, b);
  if (radial > 1.0) {
    return -1.0;
  }
  switch (m.kind) {
    case MetricKind::SR:
      return sr_ball_height(radial);
    case MetricKind::Koranyi: {
      const double r2 = radial * radial;
      return std::sqrt((1.0 - r2) * (1.0 + r2) / m.kappa);
    }
    case MetricKind::Box:
      return 1.0 / (m.box_c * m.box_c);
  }
  throw std::logic_error("section_half_height: bad metric kind");
}

bool sr_ball_contains_fast(double r, const GroupPoint& p) {
  if (!(r > 0.0)) {
    throw std::invalid_argument("sr_ball_contains_fast: radius must be positive");
  }
  const double radial = std::hypot(p.x, p.y) / r;
  if (radial > 1.0) {
    return false;
  }
  const auto& table = HeightTable::instance();
  const double height = std::abs(p.t) / (r * r);
  const double approx = table.height(radial);
  if (height < approx - table.guard()) {
    return true;
  }
  if (height > approx + table.guard()) {
    return false;
  }
  return sr_norm(p) <= r;
}

McEstimate mc_slice_area(const MetricSpec& m, double b, std::uint64_t samples, std::uint64_t seed,
                         unsigned threads, double radius) {
  m.validate();
  if (samples < kMinSliceSamples) {
    throw std::invalid_argument("mc_slice_area: need at least 10^4 samples");
  }
  if (!(radius > 0.0) || !std::isfinite(radius) || !std::isfinite(b)) {
    throw std::invalid_argument("mc_slice_area: bad radius or offset");
  }
  const double zmax = radius * radius * unit_ball_height(m);
  const SampleBox box{-radius, radius, -zmax, zmax};
  if (m.kind == MetricKind::SR) {
    HeightTable::instance();  // build before the workers start
    return mc_estimate(
        box, [&](double x, double t) { return sr_ball_contains_fast(radius, {x, b, t}); }, samples,
        seed, threads);
  }
  return mc_estimate(
      box, [&](double x, double t) { return ball_contains(m, radius, {x, b, t}); }, samples, seed,
      threads);
}

BallMesh export_ball_mesh(const MetricSpec& m, std::size_t n_psi, std::size_t n_phi) {
  m.validate();
  if (n_psi < 2 || n_phi < 2) {
    throw std::invalid_argument("export_ball_mesh: grid must be at least 2 x 2");
  }
  BallMesh mesh;
  mesh.metric = m;
  mesh.n_psi = n_psi;
  mesh.n_phi = n_phi;

  // Upper rows from the equator to the pole, then the lower rows below the equator.
  std::vector<std::pair<double, double>> rows;  // (radial, height)
  for (std::size_t k = 0; k < n_phi; ++k) {
    const double s = static_cast<double>(k) / static_cast<double>(n_phi - 1);
    if (m.kind == MetricKind::SR) {
      const double phi = kTwoPi * s;
      rows.emplace_back(profile_radial(phi), profile_height(phi));
    } else {
      rows.push_back(convex_profile(m, s));
    }
  }
  for (std::size_t k = 1; k < n_phi; ++k) {
    rows.emplace_back(rows[k].first, -rows[k].second);
  }

  mesh.vertices.reserve(rows.size() * n_psi);
  for (const auto& [radial, height] : rows) {
    for (std::size_t j = 0; j < n_psi; ++j) {
      const double psi = kTwoPi * static_cast<double>(j) / static_cast<double>(n_psi);
      mesh.vertices.push_back({radial * std::cos(psi), radial * std::sin(psi), height});
    }
  }

  auto vertex = [n_psi](std::size_t row, std::size_t j) { return row * n_psi + j % n_psi; };
  auto strip = [&](std::size_t lower, std::size_t upper) {
    for (std::size_t j = 0; j < n_psi; ++j) {
      mesh.triangles.push_back({vertex(lower, j), vertex(lower, j + 1), vertex(upper, j + 1)});
      mesh.triangles.push_back({vertex(lower, j), vertex(upper, j + 1), vertex(upper, j)});
    }
  };
  for (std::size_t k = 0; k + 1 < n_phi; ++k) {
    strip(k, k + 1);
  }
  // Lower half: the equator row 0 followed by rows n_phi .. 2 n_phi - 2; the
  // orientation flips so normals keep pointing outwards.
  std::size_t prev = 0;
  for (std::size_t k = n_phi; k < rows.size(); ++k) {
    strip(k, prev);
    prev = k;
  }
  return mesh;
}

std::string mesh_to_obj(const BallMesh& mesh) {
  std::ostringstream out;
  out.precision(17);
  out << "# " << metric_name(mesh.metric.kind) << " unit sphere, " << mesh.vertices.size()
      << " vertices\n";
  for (const auto& v : mesh.vertices) {
    out << "v " << v.x << ' ' << v.y << ' ' << v.t << '\n';
  }
  for (const auto& f : mesh.triangles) {
    out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
  }
  return out.str();
}

std::string mesh_to_csv(const BallMesh& mesh) {
  std::ostringstream out;
  out.precision(17);
  out << "x,y,t\n";
  for (const auto& v : mesh.vertices) {
    out << v.x << ',' << v.y << ',' << v.t << '\n';
  }
  return out.str();
}

std::string curve_to_csv(const SliceSection& section) {
  std::ostringstream out;
  out.precision(17);
  out << "phi,x,z\n";
  for (const auto& p : section.curve) {
    out << p.param << ',' << p.x << ',' << p.z << '\n';
  }
  return out.str();
}

}  // namespace heisdens
