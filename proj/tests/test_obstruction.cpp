#include <cmath>

#include "doctest.h"
#include "dramsey/constructions.hpp"
#include "dramsey/error.hpp"
#include "dramsey/obstruction.hpp"
#include "helpers.hpp"

using namespace dramsey;
using testing_helpers::equilateral;
using testing_helpers::pts;

TEST_SUITE("obstruction") {

TEST_CASE("verdict examples") {
  const auto v150 = obstruction_verdict(obtuse_triangle(150.0, 1.0));
  CHECK(v150.status == VerdictStatus::NotDiameterRamsey);
  CHECK(v150.circumradius == doctest::Approx(1.0));
  CHECK(v150.margin == doctest::Approx(1.0 - 1.0 / std::sqrt(2.0)).epsilon(1e-12));

  const auto eq = obstruction_verdict(equilateral());
  CHECK(eq.status == VerdictStatus::Unknown);
  CHECK(eq.margin < 0.0);

  CHECK(obstruction_verdict(cor3_simplex(3, 0.005)).status == VerdictStatus::NotDiameterRamsey);
  CHECK(verdict_status_name(VerdictStatus::Unknown) == "Unknown");
  CHECK(verdict_status_name(VerdictStatus::NotDiameterRamsey) == "NotDiameterRamsey");
}

TEST_CASE("verdict rejects sets on no sphere") {
  Matrix m(2, 4);
  m << 0, 1, 0.5, 0.5, 0, 0, 0.8, 0.3;
  try {
    obstruction_verdict(Configuration(m));
    FAIL("expected NotSpherical");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSpherical);
  }
}

TEST_CASE("triangle circumradius examples") {
  CHECK(triangle_circumradius(1.0, 90.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(triangle_circumradius(1.0, 150.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(triangle_circumradius(1.0, 135.0) - 1.0 / std::sqrt(2.0)) < 1e-12);
  CHECK_THROWS_AS(triangle_circumradius(1.0, 180.0), Error);
  CHECK_THROWS_AS(triangle_circumradius(-1.0, 100.0), Error);
}

TEST_CASE("triangle classification examples") {
  CHECK(classify_triangle(150.0, 1.0).status == VerdictStatus::NotDiameterRamsey);
  CHECK(classify_triangle(120.0, 1.0).status == VerdictStatus::Unknown);
  CHECK(classify_triangle(135.0, 1.0).status == VerdictStatus::Unknown);
  CHECK(classify_triangle(135.0 + 1e-6, 1.0).status == VerdictStatus::NotDiameterRamsey);
}

TEST_CASE("conjecture classification examples") {
  CHECK(conjecture_classification(equilateral()) == ConjectureLabel::ConjecturedDiameterRamsey);
  CHECK(conjecture_classification(obtuse_triangle(100.0, 1.0)) ==
        ConjectureLabel::ConjecturedNotDiameterRamsey);
  CHECK(conjecture_classification(pts(2, {{0, 0}, {3, 0}, {0, 4}})) ==
        ConjectureLabel::ConjecturedDiameterRamsey);
  CHECK(conjecture_label_name(ConjectureLabel::ConjecturedDiameterRamsey) ==
        "ConjecturedDiameterRamsey");
}

TEST_CASE("property: closed-form classifier matches the geometric verdict") {
  for (double a : {0.5, 1.0, 2.0}) {
    for (double alpha = 90.5; alpha < 180.0; alpha += 0.5) {
      const auto closed = classify_triangle(alpha, a);
      const auto geometric = obstruction_verdict(obtuse_triangle(alpha, a));
      CAPTURE(alpha);
      CAPTURE(a);
      CHECK(closed.status == geometric.status);
      CHECK(std::abs(closed.circumradius - geometric.circumradius) <
            1e-9 * std::max(1.0, closed.circumradius));
    }
  }
}

TEST_CASE("property: verdict is scale invariant") {
  for (double alpha : {95.0, 120.0, 134.0, 136.0, 150.0, 170.0}) {
    const auto tri = obtuse_triangle(alpha, 1.0);
    const auto base = obstruction_verdict(tri).status;
    for (double lambda : {1e-3, 0.1, 7.0, 1e4}) {
      CHECK(obstruction_verdict(tri.scaled(lambda)).status == base);
    }
  }
  const auto simplex = cor3_simplex(4, 1e-3);
  for (double lambda : {1e-3, 0.1, 7.0, 1e4}) {
    CHECK(obstruction_verdict(simplex.scaled(lambda)).status == VerdictStatus::NotDiameterRamsey);
  }
}

TEST_CASE("property: right triangles are conjectured diameter-Ramsey") {
  for (double leg : {0.1, 0.5, 1.0, 3.0, 10.0}) {
    const auto tri = pts(2, {{0, 0}, {leg, 0}, {0, 1}});
    CHECK(conjecture_classification(tri) == ConjectureLabel::ConjecturedDiameterRamsey);
  }
}

}  // TEST_SUITE
