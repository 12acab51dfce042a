#include "heisdens/constants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "heisdens/numerics/optimize.hpp"
#include "heisdens/numerics/quadrature.hpp"
#include "heisdens/numerics/roots.hpp"
#include "heisdens/profile.hpp"
#include "heisdens/slice.hpp"

namespace heisdens {

namespace {

// Offset of the second SR section, where it meets the sphere at phi = 3 pi / 2.
const double kWitnessOffset = 2.0 * std::sqrt(2.0) / (3.0 * kPi);

// Below this phi the numerator 2 sin phi - phi cos phi - phi is summed from its
// series phi^3 sum (-1)^{k+1} (2k - 1) phi^{2k-2} / (2k + 1)!.
constexpr double kLiteralSeriesCutoff = 1e-2;

double slope_numerator_over_cube(double phi) {
  if (phi < kLiteralSeriesCutoff) {
    const double p2 = phi * phi;
    return 1.0 / 6.0 - p2 * (3.0 / 120.0) + p2 * p2 * (5.0 / 5040.0);
  }
  return (2.0 * std::sin(phi) - phi * std::cos(phi) - phi) / (phi * phi * phi);
}

// The literal integrands lose a few digits to cancellation in 2 - 2 cos phi
// near 2 pi; quadrature error estimates do not see evaluation roundoff.
constexpr double kMapleRoundoff = 1e-13;

double literal_chord(double phi) { return std::sqrt(2.0 - 2.0 * std::cos(phi)); }

}  // namespace

Beta0Result compute_beta0(const MetricSpec& m, double quadrature_tol) {
  const auto s = slice_area(m, 0.0, quadrature_tol, 0);
  return {s.area, s.area_error};
}

BetaResult compute_beta(const MetricSpec& m, const ConstantsOptions& options) {
  m.validate();
  double worst_quad = 0.0;
  auto area = [&](double b) {
    const auto s = slice_area(m, b, options.quadrature_tol, 0);
    worst_quad = std::max(worst_quad, s.area_error);
    return s.area;
  };
  auto best = maximize_1d(area, 0.0, 1.0, options.offset_tol, options.scan_points);
  // A is flat at an interior SR maximum, so comparing values only pins b to
  // about sqrt(eps). The slope changes sign there and locates it to ~1e-12.
  if (m.kind == MetricKind::SR && best.argmax > 0.0) {
    const double lo = std::max(best.argmax - 1e-5, 1e-12);
    const double hi = std::min(best.argmax + 1e-5, 1.0 - 1e-12);
    auto slope = [&](double b) { return sr_slice_area_slope(b, options.quadrature_tol); };
    if (slope(lo) > 0.0 && slope(hi) < 0.0) {
      const double root = find_root(slope, lo, hi, 1e-13);
      best = {root, area(root)};
    }
  }
  // The located maximizer is within offset_tol of a true one; A can be larger
  // there by at most the variation of A over that window.
  const double lo = std::max(0.0, best.argmax - options.offset_tol);
  const double hi = std::min(1.0, best.argmax + options.offset_tol);
  const double window = std::max(std::abs(area(lo) - best.max), std::abs(area(hi) - best.max));
  return {best.max, best.argmax, worst_quad + window};
}

DensityConstants compute_gamma(const MetricSpec& m, const ConstantsOptions& options) {
  require_metric_contract(m);
  const auto b0 = compute_beta0(m, options.quadrature_tol);
  const auto b = compute_beta(m, options);
  DensityConstants c;
  c.metric = m;
  c.beta0 = b0.beta0;
  c.beta0_error = b0.error;
  c.beta = std::max(b.beta, b0.beta0);
  c.b_star = b.beta >= b0.beta0 ? b.b_star : 0.0;
  c.beta_error = b.error;
  c.gamma = c.beta0 / c.beta;
  c.abs_error = c.gamma * (c.beta0_error / c.beta0 + c.beta_error / c.beta);
  c.quadrature_tol = options.quadrature_tol;
  c.seed = options.seed;
  c.samples = options.samples;
  return c;
}

MapleReport verify_maple_inequality(double abs_tol, std::uint64_t samples, std::uint64_t seed,
                                    unsigned threads) {
  if (!(abs_tol > 0.0 && abs_tol <= kMapleMaxTol)) {
    throw std::invalid_argument("verify_maple_inequality: tolerance must lie in (0, 1e-9]");
  }
  MapleReport rep;

  auto central = [](double phi) {
    return literal_chord(phi) * slope_numerator_over_cube(phi) / phi;
  };
  const double b1_sq = 8.0 / (9.0 * kPi * kPi);
  auto offset = [b1_sq](double phi) {
    const double chord = literal_chord(phi);
    const double radial_sq = phi == 0.0 ? 1.0 : chord * chord / (phi * phi);
    return std::sqrt(std::max(radial_sq - b1_sq, 0.0)) * slope_numerator_over_cube(phi);
  };
  // The central integrand has a removable 1/phi only through the series; the
  // panel endpoints are never evaluated, so phi = 0 is not reached.
  const auto q0 = integrate_adaptive(central, 0.0, kTwoPi, abs_tol);
  const auto q1 = integrate_adaptive(offset, 0.0, 1.5 * kPi, abs_tol);
  rep.i0 = q0.value;
  rep.i0_error = q0.abs_error_estimate;
  rep.i1 = q1.value;
  rep.i1_error = q1.abs_error_estimate;
  rep.gap = rep.i1 - rep.i0;
  rep.combined_error = rep.i0_error + rep.i1_error;
  rep.gap_resolved = rep.gap > 10.0 * rep.combined_error;

  const auto a0 = sr_slice_area(0.0, abs_tol, 0);
  const auto a1 = sr_slice_area(kWitnessOffset, abs_tol, 0);
  rep.i0_route_diff = rep.i0 - a0.area / 8.0;
  rep.i1_route_diff = rep.i1 - a1.area / 8.0;
  rep.routes_agree =
      std::abs(rep.i0_route_diff) <= rep.i0_error + a0.area_error / 8.0 + kMapleRoundoff &&
      std::abs(rep.i1_route_diff) <= rep.i1_error + a1.area_error / 8.0 + kMapleRoundoff;

  auto eighth = [](McEstimate e) {
    e.mean /= 8.0;
    e.std_error /= 8.0;
    return e;
  };
  rep.mc0 = eighth(mc_slice_area(MetricSpec{}, 0.0, samples, seed, threads));
  rep.mc1 = eighth(mc_slice_area(MetricSpec{}, kWitnessOffset, samples, seed + 1, threads));
  rep.mc_consistent = std::abs(rep.mc0.mean - rep.i0) <= 3.0 * rep.mc0.std_error &&
                      std::abs(rep.mc1.mean - rep.i1) <= 3.0 * rep.mc1.std_error;

  rep.passed = rep.gap_resolved && rep.routes_agree && rep.mc_consistent;
  return rep;
}

std::vector<double> brunn_profile(const MetricSpec& m, double quadrature_tol,
                                  std::vector<double>* offsets) {
  std::vector<double> roots(kBrunnGrid);
  if (offsets) {
    offsets->resize(kBrunnGrid);
  }
  const double span = 0.99;
  for (std::size_t i = 0; i < kBrunnGrid; ++i) {
    const double b = -span + 2.0 * span * static_cast<double>(i) / static_cast<double>(kBrunnGrid - 1);
    roots[i] = std::sqrt(slice_area(m, b, quadrature_tol, 0).area);
    if (offsets) {
      (*offsets)[i] = b;
    }
  }
  return roots;
}

ConvexReport verify_convex_equality(const MetricSpec& m, const ConstantsOptions& options) {
  const auto c = compute_gamma(m, options);
  ConvexReport rep;
  rep.metric = m;
  rep.beta0 = c.beta0;
  rep.beta = c.beta;
  rep.b_star = c.b_star;
  rep.abs_diff = std::abs(c.beta - c.beta0);
  rep.combined_error = c.beta_error + c.beta0_error;
  rep.rel_diff = rep.abs_diff / c.beta0;
  rep.equality_holds = rep.abs_diff <= 10.0 * rep.combined_error && rep.rel_diff <= kConvexRelTol;

  const auto roots = brunn_profile(m, options.quadrature_tol);
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i + 1 < roots.size(); ++i) {
    worst = std::max(worst, roots[i - 1] - 2.0 * roots[i] + roots[i + 1]);
  }
  rep.brunn_max_second_diff = worst;
  rep.brunn_holds = worst <= kBrunnTol;
  rep.passed = rep.equality_holds && rep.brunn_holds;
  return rep;
}

}  // namespace heisdens
