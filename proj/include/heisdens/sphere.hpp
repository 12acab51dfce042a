#pragma once

#include "heisdens/group.hpp"

namespace heisdens {

/// Coordinates on the sphere of radius r: theta in [0, 2 pi] is the angular
/// parameter, phi in [-2 pi, 2 pi] the bending of the geodesic (phi = 0 gives
/// the straight horizontal segments, |phi| = 2 pi the poles).
struct SphereCoords {
  double theta = 0.0;
  double phi = 0.0;
  double r = 1.0;
};

/// delta_r of the unit-sphere point
///   ( (cos th (1 - cos ph) + sin th sin ph) / ph,
///     (-sin th (1 - cos ph) + cos th sin ph) / ph,
///     2 (ph - sin ph) / ph^2 ),
/// evaluated as (S sin(th + ph/2), S cos(th + ph/2), z(ph)) with S = R(|ph|).
/// At ph = 0 this is (sin th, cos th, 0).
GroupPoint sphere_point(const SphereCoords& c);

/// Upper hemisphere in rotational form (R(ph) cos psi, R(ph) sin psi, z(ph)),
/// psi in [0, 2 pi], ph in [0, 2 pi].
GroupPoint hemisphere_point(double psi, double phi);

/// Sub-Riemannian distance from the origin.
///
/// The norm depends only on R_p = |(x, y)| and |t|. With tau = |t| / R_p^2 the
/// dilation orbit of p meets the unit sphere at the unique phi with
/// nu(phi) = tau, and then rho(0, p) = R_p / R(phi). Points on the t-axis have
/// norm sqrt(pi |t|). Non-finite input throws std::invalid_argument.
double sr_norm(const GroupPoint& p);

}  // namespace heisdens
