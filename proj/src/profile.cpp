#include "heisdens/profile.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "heisdens/numerics/roots.hpp"

namespace heisdens {

namespace {

// 2 pi - fl(2 pi); restores the bits lost when forming the gap from a double phi.
constexpr double kTwoPiLow = 2.4492935982947064e-16;

// Below this |phi| the cancelling numerators are summed from their series.
constexpr double kSeriesCutoff = 0.5;
constexpr int kSeriesTerms = 10;

constexpr double kRootTol = 1e-15;

void require_profile_angle(double phi, const char* who) {
  if (!(phi >= 0.0 && phi <= kTwoPi)) {
    throw std::invalid_argument(std::string(who) + ": angle must lie in [0, 2 pi]");
  }
}

void require_gap(double u, const char* who) {
  if (!(u >= 0.0 && u <= kPi)) {
    throw std::invalid_argument(std::string(who) + ": gap must lie in [0, pi]");
  }
}

// sin(phi / 2) for phi in [0, 2 pi], accurate to a few ulps near phi = 2 pi.
double sin_half(double phi) {
  if (phi <= kPi) {
    return std::sin(0.5 * phi);
  }
  const double u = (kTwoPi - phi) + kTwoPiLow;
  return std::sin(0.5 * u);
}

// Terms t_k = (-1)^{k+1} phi^{2k-2} / (2k+1)!, k = 1, 2, ...
//   z(phi)      = 2 phi sum t_k
//   half slope  = sum (2k - 1) t_k
struct SeriesSums {
  double plain = 0.0;
  double weighted = 0.0;
};

SeriesSums profile_series(double phi) {
  const double phi2 = phi * phi;
  double term = 1.0 / 6.0;
  SeriesSums sums;
  for (int k = 1; k <= kSeriesTerms; ++k) {
    sums.plain += term;
    sums.weighted += static_cast<double>(2 * k - 1) * term;
    term *= -phi2 / static_cast<double>((2 * k + 2) * (2 * k + 3));
  }
  return sums;
}

}  // namespace

double profile_radial(double phi) {
  require_profile_angle(phi, "profile_radial");
  if (phi == 0.0) {
    return 1.0;
  }
  return sin_half(phi) / (0.5 * phi);
}

double profile_height(double phi) {
  require_profile_angle(phi, "profile_height");
  if (phi < kSeriesCutoff) {
    return 2.0 * phi * profile_series(phi).plain;
  }
  return 2.0 * (phi - std::sin(phi)) / (phi * phi);
}

double profile_half_slope(double phi) {
  require_profile_angle(phi, "profile_half_slope");
  if (phi < kSeriesCutoff) {
    return profile_series(phi).weighted;
  }
  return (2.0 * std::sin(phi) - phi * std::cos(phi) - phi) / (phi * phi * phi);
}

double profile_ratio(double phi) {
  require_profile_angle(phi, "profile_ratio");
  if (phi > 1.5 * kPi) {
    return profile_ratio_gap((kTwoPi - phi) + kTwoPiLow);
  }
  if (phi == 0.0) {
    return 0.0;
  }
  const double r = profile_radial(phi);
  return profile_height(phi) / (r * r);
}

double profile_radial_gap(double u) {
  require_gap(u, "profile_radial_gap");
  const double phi = kTwoPi - u;
  return std::sin(0.5 * u) / (0.5 * phi);
}

double profile_height_gap(double u) {
  require_gap(u, "profile_height_gap");
  const double phi = kTwoPi - u;
  return 2.0 * (phi + std::sin(u)) / (phi * phi);
}

double profile_ratio_gap(double u) {
  require_gap(u, "profile_ratio_gap");
  if (u == 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  const double phi = kTwoPi - u;
  const double s = std::sin(0.5 * u);
  return (phi + std::sin(u)) / (2.0 * s * s);
}

double profile_radial_inverse(double radial) {
  if (!(radial >= 0.0 && radial <= 1.0)) {
    throw std::invalid_argument("profile_radial_inverse: radius must lie in [0, 1]");
  }
  if (radial == 0.0) {
    return kTwoPi;
  }
  if (radial == 1.0) {
    return 0.0;
  }
  // R(pi) = 2/pi splits the two branches.
  if (radial < 2.0 / kPi) {
    const double u = find_root([radial](double g) { return profile_radial_gap(g) - radial; }, 0.0,
                               kPi, kRootTol);
    return kTwoPi - u;
  }
  return find_root([radial](double p) { return profile_radial(p) - radial; }, 0.0, kPi, kRootTol);
}

double sr_ball_height(double radial) {
  if (!(radial >= 0.0 && radial <= 1.0)) {
    throw std::invalid_argument("sr_ball_height: radius must lie in [0, 1]");
  }
  if (radial == 0.0) {
    return 1.0 / kPi;
  }
  if (radial == 1.0) {
    return 0.0;
  }
  if (radial < 2.0 / kPi) {
    const double u = find_root([radial](double g) { return profile_radial_gap(g) - radial; }, 0.0,
                               kPi, kRootTol);
    return profile_height_gap(u);
  }
  const double phi =
      find_root([radial](double p) { return profile_radial(p) - radial; }, 0.0, kPi, kRootTol);
  return profile_height(phi);
}

}  // namespace heisdens
