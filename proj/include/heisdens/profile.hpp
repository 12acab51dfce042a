#pragma once

#include <numbers>

namespace heisdens {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Profile of the sub-Riemannian unit sphere. The sphere is the surface of
// revolution of the planar curve phi -> (R(phi), z(phi)), phi in [0, 2 pi]:
//
//   R(phi) = sqrt(2 - 2 cos phi) / phi = sin(phi / 2) / (phi / 2)
//   z(phi) = 2 (phi - sin phi) / phi^2
//
// R falls from 1 at the equator to 0 at the pole; z climbs to its maximum 2/pi
// at phi = pi and comes back down to 1/pi at the pole, which leaves a conical
// dimple on the axis. Near phi = 0 the cancelling differences are evaluated
// by Taylor series; near phi = 2 pi the gap u = 2 pi - phi is the accurate
// variable.

/// R(phi) on [0, 2 pi]; R(0) = 1.
double profile_radial(double phi);

/// z(phi) on [0, 2 pi]; z(0) = 0, z(pi) = 2/pi, z(2 pi) = 1/pi.
double profile_height(double phi);

/// (2 sin phi - phi cos phi - phi) / phi^3 on [0, 2 pi], i.e. half of dz/dphi.
/// Tends to 1/6 at phi = 0 and vanishes at phi = pi.
double profile_half_slope(double phi);

/// Scale-invariant ratio nu(phi) = z / R^2 = (phi - sin phi) / (1 - cos phi) on
/// [0, 2 pi]; strictly increasing from 0, +infinity at 2 pi.
double profile_ratio(double phi);

/// R expressed through the gap u = 2 pi - phi, u in [0, pi].
double profile_radial_gap(double u);
/// z expressed through the gap u = 2 pi - phi, u in [0, pi].
double profile_height_gap(double u);
/// nu expressed through the gap u = 2 pi - phi, u in (0, pi].
double profile_ratio_gap(double u);

/// The unique phi in [0, 2 pi] with R(phi) = radial, for radial in [0, 1].
double profile_radial_inverse(double radial);

/// Height of the upper boundary of the unit ball above the horizontal circle
/// of radius `radial` in [0, 1], i.e. z(R^{-1}(radial)).
double sr_ball_height(double radial);

}  // namespace heisdens
