#include <cmath>

#include "doctest.h"
#include "dramsey/constructions.hpp"
#include "dramsey/error.hpp"
#include "dramsey/obstruction.hpp"
#include "dramsey/spheres.hpp"
#include "helpers.hpp"

using namespace dramsey;

namespace {

double binom2(double n) { return n * (n - 1.0) / 2.0; }

}  // namespace

TEST_SUITE("constructions") {

TEST_CASE("regular simplex examples") {
  const auto seg = regular_simplex(1);
  CHECK(seg.size() == 2);
  CHECK(diameter(seg) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(circumradius(regular_simplex(2)) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
  CHECK(circumradius(regular_simplex(4)) == doctest::Approx(std::sqrt(0.4)).epsilon(1e-12));
  CHECK(diameter(regular_simplex(3)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(regular_simplex(0), Error);
}

TEST_CASE("regular simplex has unit edges in every dimension") {
  for (std::size_t d = 1; d <= 10; ++d) {
    const auto s = regular_simplex(d);
    CHECK(s.dim() == d);
    CHECK(s.size() == d + 1);
    const auto dm = distance_matrix(s);
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) CHECK(std::abs(dm(i, j) - 1.0) < 1e-12);
    }
    CHECK(almost_regular_measure(s) == doctest::Approx(0.0));
  }
}

TEST_CASE("almost-regular simplex example in the plane") {
  const auto s = cor3_simplex(2, 0.01);
  REQUIRE(s.size() == 3);
  CHECK(std::abs(s.point(0)(0) - 0.5) < 1e-8);
  CHECK(std::abs(s.point(0)(1) - 0.50990195) < 1e-8);
  CHECK(std::abs(s.point(1)(0) + 0.5) < 1e-8);
  CHECK(std::abs(s.point(1)(1) - 0.50990195) < 1e-8);
  CHECK(std::abs(s.point(2)(0)) < 1e-12);
  CHECK(std::abs(s.point(2)(1) - 0.71414284) < 1e-8);
  CHECK(circumradius(s) == doctest::Approx(std::sqrt(0.51)).epsilon(1e-12));
  CHECK(std::abs((s.point(0) - s.point(2)).squaredNorm() - 0.29171) < 1e-5);

  // Only apex pairs fall short of the unit diameter, each by 2ra - 2 delta.
  const double r = std::sqrt(0.51);
  const double a = std::sqrt(0.26);
  const double expected = 2.0 * (2.0 * r * a - 0.02) / 3.0;
  CHECK(almost_regular_measure(s) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(std::abs(almost_regular_measure(s) - 0.47219) < 1e-5);
}

TEST_CASE("simplex parameter validation") {
  CHECK_THROWS_AS(cor3_simplex(1, 0.01), Error);
  CHECK_THROWS_AS(cor3_simplex(3, 0.0), Error);
  CHECK_THROWS_AS(cor3_simplex(3, -0.1), Error);
  CHECK_THROWS_AS(cor3_simplex(3, std::nan("")), Error);
  CHECK_THROWS_AS(cor3_simplex(3, INFINITY), Error);
  // The apex stays strictly closer than the diameter for every positive
  // delta: apex_distance_sq <= 1 - 1/sqrt(d).
  for (double delta : {1e-6, 0.1, 1.0, 10.0, 1e4}) {
    CHECK(SimplexSpec{2, delta}.apex_distance_sq() < 1.0 - 1.0 / std::sqrt(2.0) + 1e-12);
    CHECK(diameter(cor3_simplex(2, delta)) == doctest::Approx(1.0).epsilon(1e-9));
  }
  const SimplexSpec spec{3, 0.01};
  CHECK(spec.r() == doctest::Approx(std::sqrt(0.51)));
  CHECK(spec.a() == doctest::Approx(std::sqrt(1.0 / 6.0 + 0.01)));
}

TEST_CASE("property: almost-regular simplex invariants") {
  for (std::size_t d = 2; d <= 7; ++d) {
    for (double delta : {1e-2, 3e-3, 1e-3, 1e-4, 1e-5}) {
      const auto s = cor3_simplex(d, delta);
      const SimplexSpec spec{d, delta};
      CHECK(s.size() == d + 1);
      for (std::size_t i = 0; i <= d; ++i) CHECK(std::abs(s.point(i).norm() - spec.r()) < 1e-9);
      const auto dm = distance_matrix(s);
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) CHECK(std::abs(dm(i, j) - 1.0) < 1e-9);
        CHECK(std::abs(dm(i, d) * dm(i, d) - spec.apex_distance_sq()) < 1e-9);
      }
      CHECK(std::abs(circumradius(s) - spec.r()) < 1e-9);
      CHECK(circumradius(s) > 1.0 / std::sqrt(2.0));
      CHECK(obstruction_verdict(s).status == VerdictStatus::NotDiameterRamsey);
      const double m = almost_regular_measure(s);
      CHECK(m >= 0.0);
      CHECK(m <= 1.0);
    }
    const double limit = std::sqrt(static_cast<double>(d)) / binom2(d + 1.0);
    CHECK(std::abs(almost_regular_measure(cor3_simplex(d, 1e-7)) - limit) < 1e-5);
    CHECK(std::abs(SimplexSpec{d, 1e-9}.apex_distance_sq() -
                   (1.0 - 1.0 / std::sqrt(static_cast<double>(d)))) < 1e-6);
  }
}

TEST_CASE("obtuse triangle examples") {
  const auto t = obtuse_triangle(150.0, 1.0);
  CHECK(t.point(2)(0) == doctest::Approx(0.5));
  CHECK(std::abs(t.point(2)(1) - 0.13397460) < 1e-8);
  CHECK(circumradius(t) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(circumradius(obtuse_triangle(120.0, 1.0)) ==
        doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
  CHECK_FALSE(circumcenter_in_hull(obtuse_triangle(91.0, 1.0)));
  CHECK_THROWS_AS(obtuse_triangle(90.0, 1.0), Error);
  CHECK_THROWS_AS(obtuse_triangle(180.0, 1.0), Error);
  CHECK_THROWS_AS(obtuse_triangle(120.0, 0.0), Error);
}

TEST_CASE("property: obtuse triangle angle, diameter and circumradius") {
  for (double a : {0.25, 1.0, 3.0}) {
    for (double alpha = 90.5; alpha < 180.0; alpha += 0.5) {
      const auto t = obtuse_triangle(alpha, a);
      CHECK(std::abs(diameter(t) - a) < 1e-9 * a);
      CHECK(std::abs(largest_angle_deg(t) - alpha) < 1e-6);
      CHECK(std::abs(circumradius(t) - a / (2.0 * std::sin(alpha * M_PI / 180.0))) <
            1e-9 * std::max(1.0, circumradius(t)));
    }
  }
}

TEST_CASE("measure rejects coincident points") {
  CHECK_THROWS_AS(almost_regular_measure(testing_helpers::pts(2, {{1, 1}, {1, 1}})), Error);
}

}  // TEST_SUITE
