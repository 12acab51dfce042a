#include "heisdens/density.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "heisdens/numerics/monte_carlo.hpp"
#include "heisdens/numerics/optimize.hpp"
#include "heisdens/numerics/parallel.hpp"
#include "heisdens/slice.hpp"

namespace heisdens {

namespace {

constexpr double kRectangleShrink = 1.0 - 1e-9;
constexpr std::uint64_t kCoverChunk = 1024;

void require_radius(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw std::invalid_argument("radius must be positive and finite");
  }
}

// Ball center whose slice on Sigma has its foot at (x, t), for offset b and radius r.
GroupPoint center_over(double x, double t, double b, double r) {
  const double wy = b * r;
  return {x, wy, t - 2.0 * x * wy};
}

}  // namespace

double plane_measure_in_ball(const MetricSpec& m, const GroupPoint& w, double r,
                             double quadrature_tol) {
  require_radius(r);
  const double b = w.y / r;
  if (std::abs(b) >= 1.0) {
    return 0.0;
  }
  return r * r * r * slice_area(m, b, quadrature_tol, 0).area;
}

double density_ratio(const DensityConstants& c, double measure, double r) {
  const double diam = 2.0 * r;
  return measure / (c.beta / 8.0 * diam * diam * diam);
}

std::vector<double> upper_density_radii() {
  std::vector<double> radii;
  for (int k = 0; k <= 6; ++k) {
    radii.push_back(std::pow(10.0, -k));
  }
  return radii;
}

DensityCurve upper_density_at(const DensityConstants& c, double x, double t) {
  DensityCurve curve;
  curve.radii = upper_density_radii();
  const GroupPoint center{x, 0.0, t};
  for (const double r : curve.radii) {
    const double mu = plane_measure_in_ball(c.metric, center, r, c.quadrature_tol);
    curve.values.push_back(density_ratio(c, mu, r));
  }
  const auto [lo, hi] = std::minmax_element(curve.values.begin(), curve.values.end());
  curve.variation = *hi - *lo;
  return curve;
}

FedererDensity federer_density_at(const DensityConstants& c, double x, double t, double r,
                                  bool centers_on_sigma) {
  require_radius(r);
  auto ratio_at = [&](double b) {
    const GroupPoint w = center_over(x, t, b, r);
    return density_ratio(c, plane_measure_in_ball(c.metric, w, r, c.quadrature_tol), r);
  };
  FedererDensity out;
  if (centers_on_sigma) {
    out.offset = 0.0;
    out.value = ratio_at(0.0);
  } else {
    const auto best = maximize_1d(ratio_at, 0.0, 1.0, kDefaultOffsetTol);
    out.offset = best.argmax;
    out.value = best.max;
  }
  out.center = center_over(x, t, out.offset, r);
  const GroupPoint p{x, 0.0, t};
  out.contains_point =
      ball_contains(c.metric, r, group_multiply(group_inverse(out.center), p));
  return out;
}

std::string_view cover_kind_name(CoverKind kind) noexcept {
  return kind == CoverKind::Spherical ? "spherical" : "centered";
}

InscribedRectangle inscribed_rectangle(const MetricSpec& m, double b, std::size_t grid) {
  const double ab = std::abs(b);
  if (!(ab < 1.0)) {
    throw std::invalid_argument("inscribed_rectangle: offset must lie in [0, 1)");
  }
  const double half_width = std::sqrt((1.0 - ab) * (1.0 + ab));
  const double axis_height = section_half_height(m, ab, 0.0);
  auto height_over = [&](double u) {
    return std::max(0.0, std::min(axis_height, section_half_height(m, ab, u)));
  };
  const auto best = maximize_1d([&](double u) { return u * height_over(u); }, 0.0, half_width,
                                1e-10 * half_width, grid);
  InscribedRectangle rect;
  rect.b = ab;
  rect.u = best.argmax * kRectangleShrink;
  rect.v = height_over(best.argmax) * kRectangleShrink;
  rect.fill = 4.0 * rect.u * rect.v / slice_area(m, ab, kDefaultQuadratureTol, 0).area;
  return rect;
}

CoverEstimate build_cover(const DensityConstants& c, CoverKind kind, double r,
                          const InscribedRectangle& rect) {
  require_radius(r);
  if (r > kMaxCoverRadius) {
    throw std::invalid_argument("build_cover: radius too large to tile the unit patch");
  }
  if (!(rect.u > 0.0 && rect.v > 0.0)) {
    throw std::invalid_argument("build_cover: degenerate tile");
  }
  CoverEstimate cover;
  cover.kind = kind;
  cover.radius = r;
  cover.b = kind == CoverKind::Spherical ? rect.b : 0.0;
  cover.u = rect.u;
  cover.v = rect.v;
  cover.shear = 2.0 * cover.b * r;
  cover.n_x = static_cast<std::uint64_t>(std::ceil(1.0 / (2.0 * rect.u * r)));
  // Sheared tiles drift by shear / n_x across a column, so the stack must
  // reach that much further to cover the column's full height.
  const double span = 1.0 + cover.shear / static_cast<double>(cover.n_x);
  cover.n_t = static_cast<std::uint64_t>(std::ceil(span / (2.0 * rect.v * r * r)));
  cover.pitch = span / static_cast<double>(cover.n_t);
  cover.tile_count = cover.n_x * cover.n_t;
  cover.estimate = static_cast<double>(cover.tile_count) * c.beta * r * r * r;
  return cover;
}

CoverEstimate build_cover(const DensityConstants& c, CoverKind kind, double r) {
  const double b = kind == CoverKind::Spherical ? c.b_star : 0.0;
  return build_cover(c, kind, r, inscribed_rectangle(c.metric, b));
}

GroupPoint cover_center(const CoverEstimate& cover, std::uint64_t i, std::uint64_t j) {
  const double width = 1.0 / static_cast<double>(cover.n_x);
  const double x = (static_cast<double>(i) + 0.5) * width;
  const double drift = 0.5 * cover.shear * width;
  const double t = -drift + (static_cast<double>(j) + 0.5) * cover.pitch;
  return center_over(x, t, cover.b, cover.radius);
}

CoverCheck verify_cover(const DensityConstants& c, const CoverEstimate& cover, std::uint64_t points,
                        std::uint64_t seed, unsigned threads) {
  CoverCheck check;
  check.points = points;
  const double width = 1.0 / static_cast<double>(cover.n_x);
  const auto n_x = static_cast<std::int64_t>(cover.n_x);
  const auto n_t = static_cast<std::int64_t>(cover.n_t);

  auto covered = [&](double x, double t) {
    const std::int64_t i0 = std::min(static_cast<std::int64_t>(x / width), n_x - 1);
    for (std::int64_t i = std::max<std::int64_t>(i0 - 1, 0); i <= std::min(i0 + 1, n_x - 1); ++i) {
      const double xc = (static_cast<double>(i) + 0.5) * width;
      const double local = t - cover.shear * (x - xc) + 0.5 * cover.shear * width;
      const auto j0 = static_cast<std::int64_t>(std::floor(local / cover.pitch));
      for (std::int64_t j = std::max<std::int64_t>(j0 - 1, 0); j <= std::min(j0 + 1, n_t - 1);
           ++j) {
        const GroupPoint w = cover_center(cover, static_cast<std::uint64_t>(i),
                                          static_cast<std::uint64_t>(j));
        const GroupPoint q = group_multiply(group_inverse(w), {x, 0.0, t});
        if (ball_contains(c.metric, cover.radius, q)) {
          return true;
        }
      }
    }
    return false;
  };

  const std::uint64_t chunks = (points + kCoverChunk - 1) / kCoverChunk;
  const auto misses = parallel_map(chunks, threads, [&](std::size_t k) {
    auto rng = substream_engine(seed, k);
    const std::uint64_t begin = k * kCoverChunk;
    const std::uint64_t end = std::min(points, begin + kCoverChunk);
    std::uint64_t miss = 0;
    for (std::uint64_t s = begin; s < end; ++s) {
      const double x = uniform01(rng);
      const double t = uniform01(rng);
      miss += covered(x, t) ? 0 : 1;
    }
    return miss;
  });
  for (const auto m : misses) {
    check.uncovered += m;
  }

  if (cover.kind == CoverKind::Centered) {
    // Centers are tile centers; the extreme ones must lie in Q on Sigma.
    for (const auto& [i, j] : {std::pair<std::uint64_t, std::uint64_t>{0, 0},
                               {cover.n_x - 1, cover.n_t - 1}}) {
      const GroupPoint w = cover_center(cover, i, j);
      check.centers_in_patch = check.centers_in_patch && w.y == 0.0 && w.x >= 0.0 && w.x <= 1.0 &&
                               w.t >= 0.0 && w.t <= 1.0;
    }
  }
  check.passed = check.uncovered == 0 && check.centers_in_patch;
  return check;
}

std::vector<double> radius_schedule(double rmin, double rmax, std::size_t steps) {
  if (!(rmin > 0.0 && rmax >= rmin) || steps == 0) {
    throw std::invalid_argument("radius_schedule: need 0 < rmin <= rmax and steps >= 1");
  }
  std::vector<double> radii;
  if (steps == 1) {
    radii.push_back(rmin);
    return radii;
  }
  const double ratio = rmin / rmax;
  for (std::size_t k = 0; k < steps; ++k) {
    const double r = k + 1 == steps ? rmin
                                    : rmax * std::pow(ratio, static_cast<double>(k) /
                                                                 static_cast<double>(steps - 1));
    radii.push_back(r);
  }
  return radii;
}

CompareReport compare_spherical_centered(const DensityConstants& c,
                                         const std::vector<double>& schedule,
                                         const CompareOptions& options) {
  if (schedule.empty()) {
    throw std::invalid_argument("compare_spherical_centered: empty schedule");
  }
  CompareReport rep;
  rep.centered_target = c.beta / c.beta0;
  rep.spherical_tile = inscribed_rectangle(c.metric, c.b_star);
  rep.centered_tile = inscribed_rectangle(c.metric, 0.0);

  auto curve = [&](CoverKind kind, const InscribedRectangle& rect, double target) {
    std::vector<CoverCurvePoint> points;
    for (const double r : schedule) {
      const auto cover = build_cover(c, kind, r, rect);
      const auto half = build_cover(c, kind, 0.5 * r, rect);
      CoverCurvePoint p;
      p.r = r;
      p.estimate = cover.estimate;
      p.halved_estimate = half.estimate;
      p.trend_ok = half.estimate <= (1.0 + options.trend_slack) * cover.estimate;
      p.above_target = cover.estimate >= target;
      p.valid = verify_cover(c, cover, options.check_points, options.seed, options.threads).passed;
      points.push_back(p);
    }
    return points;
  };
  rep.spherical = curve(CoverKind::Spherical, rep.spherical_tile, rep.spherical_target);
  rep.centered = curve(CoverKind::Centered, rep.centered_tile, rep.centered_target);

  const auto finest = std::min_element(schedule.begin(), schedule.end()) - schedule.begin();
  const auto& s = rep.spherical[static_cast<std::size_t>(finest)];
  const auto& k = rep.centered[static_cast<std::size_t>(finest)];
  rep.finest_radius = s.r;
  rep.ratio = k.estimate / s.estimate;
  rep.ratio_ok = options.expect_equality ? std::abs(rep.ratio - 1.0) <= 0.1
                                         : rep.ratio >= options.min_ratio;
  rep.within_band = s.estimate <= (1.0 + options.band) * rep.spherical_target &&
                    k.estimate <= (1.0 + options.band) * rep.centered_target;

  rep.targets_ok = true;
  rep.trend_ok = true;
  rep.covers_valid = true;
  for (const auto* list : {&rep.spherical, &rep.centered}) {
    for (const auto& p : *list) {
      rep.targets_ok = rep.targets_ok && p.above_target;
      rep.trend_ok = rep.trend_ok && p.trend_ok;
      rep.covers_valid = rep.covers_valid && p.valid;
    }
  }
  rep.passed = rep.ratio_ok && rep.targets_ok && rep.within_band && rep.trend_ok && rep.covers_valid;
  return rep;
}

}  // namespace heisdens
