#pragma once

#include <cmath>
#include <random>

#include "dramsey/geom.hpp"
#include "oracles.hpp"

namespace testing_helpers {

inline dramsey::Configuration pts(std::size_t dim, std::vector<std::vector<double>> rows) {
  return dramsey::Configuration(dim, rows);
}

inline dramsey::Configuration unit_square() {
  return pts(2, {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

inline dramsey::Configuration equilateral(double side = 1.0) {
  return pts(2, {{0, 0}, {side, 0}, {side / 2, side * std::sqrt(3.0) / 2}});
}

inline dramsey::Configuration random_config(std::mt19937_64& rng, int dim, int n) {
  return dramsey::Configuration(oracle::random_points(rng, dim, n));
}

}  // namespace testing_helpers
