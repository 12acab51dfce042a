#include "heisdens/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "heisdens/numerics/roots.hpp"
#include "heisdens/profile.hpp"

namespace heisdens {

namespace {

// nu(pi) = pi / 2: the two solve branches meet at the height maximum.
constexpr double kRatioAtPi = 0.5 * kPi;

// Beyond this ratio the orbit meets the sphere within ~1e-100 of the pole and
// the pole formula sqrt(pi |t|) is exact to double precision.
constexpr double kPoleRatio = 1e200;

}  // namespace

GroupPoint sphere_point(const SphereCoords& c) {
  if (!(c.theta >= 0.0 && c.theta <= kTwoPi)) {
    throw std::invalid_argument("sphere_point: theta must lie in [0, 2 pi]");
  }
  if (!(c.phi >= -kTwoPi && c.phi <= kTwoPi)) {
    throw std::invalid_argument("sphere_point: phi must lie in [-2 pi, 2 pi]");
  }
  if (!(c.r >= 0.0) || !std::isfinite(c.r)) {
    throw std::invalid_argument("sphere_point: r must be nonnegative");
  }
  const double bend = std::abs(c.phi);
  const double radial = profile_radial(bend);
  const double height = std::copysign(profile_height(bend), c.phi);
  const double angle = c.theta + 0.5 * c.phi;
  return {c.r * radial * std::sin(angle), c.r * radial * std::cos(angle), c.r * c.r * height};
}

GroupPoint hemisphere_point(double psi, double phi) {
  if (!(psi >= 0.0 && psi <= kTwoPi)) {
    throw std::invalid_argument("hemisphere_point: psi must lie in [0, 2 pi]");
  }
  const double radial = profile_radial(phi);
  return {radial * std::cos(psi), radial * std::sin(psi), profile_height(phi)};
}

double sr_norm(const GroupPoint& p) {
  if (!is_finite(p)) {
    throw std::invalid_argument("sr_norm: non-finite point");
  }
  const double horizontal = std::hypot(p.x, p.y);
  const double vertical = std::abs(p.t);
  if (vertical == 0.0) {
    return horizontal;
  }
  if (horizontal == 0.0) {
    return std::sqrt(kPi * vertical);
  }
  const double tau = (vertical / horizontal) / horizontal;
  if (!(tau < kPoleRatio)) {
    return std::sqrt(kPi * vertical);
  }

  // Rounding can leave nu(pi) a hair off pi/2; such tau sit on the seam.
  if (tau <= kRatioAtPi) {
    auto excess = [tau](double a) { return profile_ratio(a) - tau; };
    if (excess(kPi) <= 0.0) {
      return horizontal / profile_radial(kPi);
    }
    const double phi = find_root(excess, 0.0, kPi, 1e-15);
    return horizontal / profile_radial(phi);
  }

  // Near the pole nu ~ 4 pi / u^2 in the gap u = 2 pi - phi; bracket around
  // that estimate and solve for u with relative accuracy.
  auto excess = [tau](double u) { return profile_ratio_gap(u) - tau; };
  if (excess(kPi) >= 0.0) {
    return horizontal / profile_radial_gap(kPi);
  }
  const double guess = std::min(kPi, std::sqrt(4.0 * kPi / tau));
  double lo = 0.5 * guess;
  while (excess(lo) <= 0.0) {
    lo *= 0.5;
  }
  double hi = std::min(kPi, 2.0 * guess);
  if (excess(hi) > 0.0) {
    hi = kPi;
  }
  const double u = find_root(excess, lo, hi, 1e-300);
  return horizontal / profile_radial_gap(u);
}

}  // namespace heisdens
