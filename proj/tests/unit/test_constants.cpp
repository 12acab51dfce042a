#include <doctest.h>

#include <cmath>
#include <initializer_list>
#include <stdexcept>

#include "heisdens/constants.hpp"
#include "heisdens/profile.hpp"
#include "heisdens/slice.hpp"
#include "oracle_values.hpp"

using namespace heisdens;

namespace {

const MetricSpec kSr{};
const MetricSpec kKoranyi{MetricKind::Koranyi, 1.0, 1.0};

}  // namespace

TEST_CASE("beta0") {
  const auto sr = compute_beta0(kSr);
  CHECK(std::abs(sr.beta0 - 8.0 * oracle::kCentralIntegral) <= 1e-11);
  CHECK(sr.error <= kDefaultQuadratureTol);
  CHECK(std::abs(compute_beta0(kKoranyi).beta0 - oracle::kKoranyiCentralArea) <= 1e-11);
  CHECK(compute_beta0({MetricKind::Box, 1.0, 1.0}).beta0 == 4.0);
}

TEST_CASE("beta and its maximizer") {
  const auto sr = compute_beta(kSr);
  CHECK(std::abs(sr.beta - oracle::kBeta) <= 1e-11);
  CHECK(std::abs(sr.b_star - oracle::kBStar) <= kDefaultOffsetTol);
  CHECK(sr.beta >= sr_slice_area(oracle::kWitnessOffset, 1e-11).area);
  // No grid offset beats the located maximum.
  for (int i = 0; i <= 1000; ++i) {
    const double b = i / 1000.0;
    REQUIRE(sr_slice_area(b, 1e-11).area <= sr.beta + 1e-12);
  }
  const auto k = compute_beta(kKoranyi);
  CHECK(k.b_star == 0.0);
  CHECK(k.beta == compute_beta0(kKoranyi).beta0);
}

TEST_CASE("gamma") {
  const auto sr = compute_gamma(kSr);
  CHECK(std::abs(sr.gamma - oracle::kGamma) <= 1e-11);
  CHECK(sr.gamma < 1.0);
  CHECK(1.0 - sr.gamma > 10.0 * sr.abs_error);
  CHECK(sr.beta >= sr.beta0);
  CHECK(sr.gamma <= 1.0 + sr.abs_error);
  const auto k = compute_gamma(kKoranyi);
  CHECK(std::abs(k.gamma - 1.0) <= 10.0 * k.abs_error + 1e-15);
  const auto b = compute_gamma({MetricKind::Box, 1.0, 0.7});
  CHECK(b.gamma == 1.0);
  CHECK_THROWS_AS(compute_gamma({MetricKind::Box, 1.0, 3.0}), std::invalid_argument);
}

TEST_CASE("section integrals in their original form") {
  const auto rep = verify_maple_inequality(1e-12, 200000, 17);
  CHECK(std::abs(rep.i0 - oracle::kCentralIntegral) <= 1e-12);
  CHECK(std::abs(rep.i1 - oracle::kOffsetIntegral) <= 1e-12);
  CHECK(rep.i0 < rep.i1);
  CHECK(rep.gap_resolved);
  CHECK(rep.routes_agree);
  CHECK(rep.mc_consistent);
  CHECK(rep.passed);
  CHECK(rep.i0_error <= 1e-10);
  CHECK(rep.i1_error <= 1e-10);
  CHECK_THROWS_AS(verify_maple_inequality(1e-8), std::invalid_argument);
}

TEST_CASE("convex equality and its negative control") {
  const auto k = verify_convex_equality(kKoranyi);
  CHECK(k.equality_holds);
  CHECK(k.brunn_holds);
  CHECK(k.rel_diff <= kConvexRelTol);
  CHECK(k.passed);
  const auto b = verify_convex_equality({MetricKind::Box, 1.0, 0.8});
  CHECK(b.passed);
  const auto sr = verify_convex_equality(kSr);
  CHECK_FALSE(sr.equality_holds);
  CHECK_FALSE(sr.brunn_holds);
  CHECK_FALSE(sr.passed);
}

TEST_CASE("Brunn profile is even") {
  std::vector<double> offsets;
  const auto roots = brunn_profile(kKoranyi, 1e-11, &offsets);
  REQUIRE(roots.size() == kBrunnGrid);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    CHECK(offsets[i] == doctest::Approx(-offsets[roots.size() - 1 - i]));
    CHECK(roots[i] == doctest::Approx(roots[roots.size() - 1 - i]).epsilon(1e-13));
  }
}

TEST_CASE("slice areas scale with the cube of the radius") {
  for (double r : {0.5, 2.0}) {
    CAPTURE(r);
    const auto mc = mc_slice_area(kSr, 0.3 * r, 1000000, 31, 2, r);
    const double expected = r * r * r * sr_slice_area(0.3, 1e-11).area;
    CHECK(std::abs(mc.mean - expected) <= 3.0 * mc.std_error);
  }
}

TEST_CASE("gamma from pure Monte Carlo areas") {
  const auto c = compute_gamma(kSr);
  const auto a0 = mc_slice_area(kSr, 0.0, 2000000, 41, 2);
  const auto a1 = mc_slice_area(kSr, c.b_star, 2000000, 42, 2);
  const double g = a0.mean / a1.mean;
  const double sigma = g * std::hypot(a0.std_error / a0.mean, a1.std_error / a1.mean);
  CHECK(std::abs(g - c.gamma) <= 3.0 * sigma + c.abs_error);
}
