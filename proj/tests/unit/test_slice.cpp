#include <doctest.h>

#include <cmath>
#include <initializer_list>
#include <stdexcept>
#include <random>
#include <sstream>

#include "heisdens/profile.hpp"
#include "heisdens/slice.hpp"
#include "heisdens/sphere.hpp"
#include "oracle_values.hpp"

using namespace heisdens;

namespace {

const MetricSpec kSr{};
const MetricSpec kKoranyi{MetricKind::Koranyi, 1.0, 1.0};
const MetricSpec kBox{MetricKind::Box, 1.0, 1.0};

}  // namespace

TEST_CASE("phi_max examples") {
  CHECK(phi_max(0.0) == kTwoPi);
  CHECK(phi_max(1.0) == 0.0);
  CHECK(std::abs(phi_max(oracle::kWitnessOffset) - 1.5 * kPi) <= 1e-12);
  CHECK_THROWS_AS(phi_max(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(phi_max(1.1), std::invalid_argument);
}

TEST_CASE("slice_half_width examples") {
  for (double phi : {0.0, 1.0, 4.0, kTwoPi}) {
    CHECK(slice_half_width(phi, 0.0) == doctest::Approx(profile_radial(phi)).epsilon(1e-15));
  }
  for (double b : {0.1, 0.5, 0.9}) {
    CHECK(std::abs(slice_half_width(phi_max(b), b)) <= 1e-7);
    CHECK(slice_half_width(0.0, b) == doctest::Approx(std::sqrt(1.0 - b * b)).epsilon(1e-15));
  }
  const double b1 = oracle::kWitnessOffset;
  CHECK(slice_half_width(0.0, b1) ==
        doctest::Approx(std::sqrt(1.0 - 8.0 / (9.0 * kPi * kPi))).epsilon(1e-15));
}

TEST_CASE("sr_slice_area against the x-integration oracle") {
  struct Case {
    double b, area;
  };
  for (const auto& c : {Case{0.0, oracle::kAreaB0}, Case{0.1, oracle::kAreaB01},
                        Case{oracle::kWitnessOffset, oracle::kAreaWitness},
                        Case{0.5, oracle::kAreaB05}, Case{0.9, oracle::kAreaB09}}) {
    CAPTURE(c.b);
    const auto s = sr_slice_area(c.b, 1e-11);
    CHECK(std::abs(s.area - c.area) <= 1e-11);
    CHECK(s.area_error <= 1e-11);
    REQUIRE(s.phi_max.has_value());
    CHECK(*s.phi_max == doctest::Approx(phi_max(c.b)));
  }
  CHECK(sr_slice_area(1.0, 1e-11).area == 0.0);
  CHECK(sr_slice_area(1.5, 1e-11).area == 0.0);
  CHECK(sr_slice_area(oracle::kWitnessOffset, 1e-11).area > sr_slice_area(0.0, 1e-11).area);
}

TEST_CASE("slice areas are even in b") {
  for (double b : {0.05, 0.3, 0.77}) {
    CHECK(sr_slice_area(-b, 1e-11).area == sr_slice_area(b, 1e-11).area);
    CHECK(koranyi_slice_area(-b, 1.0, 1e-11).area == koranyi_slice_area(b, 1.0, 1e-11).area);
  }
}

TEST_CASE("SR slice slope matches finite differences") {
  for (double b : {0.05, 0.2, oracle::kBStar, 0.6, 0.95}) {
    CAPTURE(b);
    const double h = 1e-5;
    const double fd = (sr_slice_area(b + h, 1e-13).area - sr_slice_area(b - h, 1e-13).area) / (2 * h);
    CHECK(std::abs(sr_slice_area_slope(b, 1e-12) - fd) <= 1e-6);
  }
  CHECK(sr_slice_area_slope(0.0, 1e-12) == 0.0);
  CHECK(sr_slice_area_slope(-0.3, 1e-12) == -sr_slice_area_slope(0.3, 1e-12));
}

TEST_CASE("A(b) has no jumps on a 200-point grid") {
  const int n = 200;
  std::vector<double> a(n + 1);
  for (int i = 0; i <= n; ++i) {
    a[i] = sr_slice_area(static_cast<double>(i) / n, 1e-11).area;
  }
  // Each step must be bounded by the larger of the neighbouring steps times a
  // generous factor; the square-root drop at b = 1 is the steepest part.
  for (int i = 1; i < n - 1; ++i) {
    const double step = std::abs(a[i + 1] - a[i]);
    const double local = std::max(std::abs(a[i] - a[i - 1]), std::abs(a[i + 2] - a[i + 1]));
    CHECK(step <= 3.0 * local + 1e-12);
  }
}

TEST_CASE("Korányi and box slices") {
  const auto k = koranyi_slice_area(0.0, 1.0, 1e-12);
  CHECK(std::abs(k.area - oracle::kKoranyiCentralArea) <= 1e-12);
  CHECK(koranyi_slice_area(1.0, 1.0, 1e-12).area == 0.0);
  // Area scales like 1 / sqrt(kappa).
  CHECK(koranyi_slice_area(0.4, 4.0, 1e-12).area ==
        doctest::Approx(0.5 * koranyi_slice_area(0.4, 1.0, 1e-12).area).epsilon(1e-12));
  CHECK(box_slice_area(0.6, 1.0).area == doctest::Approx(4.0 * 0.8));
  CHECK(box_slice_area(0.0, 2.0).area == doctest::Approx(1.0));
  CHECK(slice_area(kKoranyi, 0.0, 1e-12).area == k.area);
}

TEST_CASE("boundary curves lie on the unit sphere") {
  for (double b : {0.0, 0.2, oracle::kWitnessOffset, 0.7, 0.99}) {
    CAPTURE(b);
    const auto s = sr_slice_area(b, 1e-10, 400);
    CHECK(s.curve.size() >= 256);
    double worst = 0.0;
    for (const auto& p : s.curve) {
      worst = std::max(worst, std::abs(sr_norm({p.x, b, p.z}) - 1.0));
    }
    CHECK(worst <= 1e-8);
  }
  for (const auto& m : {kKoranyi, kBox}) {
    const auto s = slice_area(m, 0.4, 1e-10);
    CHECK(s.curve.size() >= 256);
    for (const auto& p : s.curve) {
      CHECK(std::abs(metric_norm(m, {p.x, 0.4, p.z}) - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("section half heights") {
  CHECK(section_half_height(kSr, 0.0, 0.0) == doctest::Approx(1.0 / kPi));
  CHECK(section_half_height(kSr, 0.6, 0.8) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(section_half_height(kSr, 0.6, 0.81) < 0.0);
  CHECK(section_half_height(kKoranyi, 0.0, 0.0) == 1.0);
  CHECK(section_half_height(kBox, 0.3, 0.2) == 1.0);
}

TEST_CASE("fast SR membership agrees with the exact test") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> x(-1.05, 1.05);
  std::uniform_real_distribution<double> t(-0.7, 0.7);
  for (int i = 0; i < 200000; ++i) {
    const GroupPoint p{x(rng), x(rng), t(rng)};
    REQUIRE(sr_ball_contains_fast(1.0, p) == (sr_norm(p) <= 1.0));
  }
  // Points straddling the boundary.
  for (double phi : {0.01, 1.0, 3.0, 5.0, 6.2}) {
    const auto on = hemisphere_point(0.3, phi);
    CHECK(sr_ball_contains_fast(1.0, dilate(1.0 - 1e-12, on)));
    CHECK_FALSE(sr_ball_contains_fast(1.0, dilate(1.0 + 1e-12, on)));
    CHECK(sr_ball_contains_fast(3.0, dilate(3.0 * (1.0 - 1e-12), on)));
  }
}

TEST_CASE("Monte Carlo slice areas") {
  CHECK(mc_slice_area(kSr, 1.5, 10000, 1).mean == 0.0);
  const auto s = mc_slice_area(kSr, 0.0, 1000000, 2, 2);
  CHECK(std::abs(s.mean - oracle::kAreaB0) <= 3.0 * s.std_error);
  const auto k = mc_slice_area(kKoranyi, 0.0, 1000000, 3, 2);
  CHECK(std::abs(k.mean - oracle::kKoranyiCentralArea) <= 3.0 * k.std_error);
  // Evenness through the oracle.
  const auto plus = mc_slice_area(kSr, 0.4, 1000000, 4);
  const auto minus = mc_slice_area(kSr, -0.4, 1000000, 5);
  CHECK(std::abs(plus.mean - minus.mean) <= 3.0 * std::hypot(plus.std_error, minus.std_error));
  CHECK_THROWS_AS(mc_slice_area(kSr, 0.0, 9999, 1), std::invalid_argument);
  // Same seed, different thread count.
  CHECK(mc_slice_area(kSr, 0.2, 300000, 9, 1).mean == mc_slice_area(kSr, 0.2, 300000, 9, 4).mean);
}

TEST_CASE("ball mesh") {
  const auto mesh = export_ball_mesh(kSr, 16, 9);
  CHECK(mesh.vertices.size() == 16 * (2 * 9 - 1));
  CHECK(mesh.triangles.size() == 2 * 16 * 2 * 8);
  // Row 0 is the unit circle in t = 0; the last upper row is the apex.
  for (std::size_t j = 0; j < 16; ++j) {
    const auto& v = mesh.vertices[j];
    CHECK(v.t == 0.0);
    CHECK(std::hypot(v.x, v.y) == doctest::Approx(1.0).epsilon(1e-15));
    const auto& apex = mesh.vertices[8 * 16 + j];
    CHECK(std::hypot(apex.x, apex.y) <= 1e-15);
    CHECK(apex.t == doctest::Approx(1.0 / kPi).epsilon(1e-15));
  }
  for (const auto& m : {kSr, kKoranyi, kBox, MetricSpec{MetricKind::Koranyi, 0.5, 1.0}}) {
    const auto mm = export_ball_mesh(m, 32, 33);
    for (const auto& v : mm.vertices) {
      REQUIRE(std::abs(metric_norm(m, v) - 1.0) <= 1e-8);
    }
    for (const auto& f : mm.triangles) {
      REQUIRE(std::max({f[0], f[1], f[2]}) < mm.vertices.size());
    }
  }
  CHECK_THROWS_AS(export_ball_mesh(kSr, 1, 5), std::invalid_argument);
  const auto obj = mesh_to_obj(export_ball_mesh(kSr, 4, 3));
  CHECK(obj.find("\nv ") != std::string::npos);
  CHECK(obj.find("\nf 1 2 ") != std::string::npos);
  CHECK(mesh_to_csv(mesh).rfind("x,y,t\n", 0) == 0);
  CHECK(curve_to_csv(sr_slice_area(0.2, 1e-10)).rfind("phi,x,z\n", 0) == 0);
}
