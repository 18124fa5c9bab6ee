#pragma once

#include <cstddef>
#include <functional>

#include "dramsey/geom.hpp"

namespace dramsey::detail {

struct NelderMeadOptions {
  double ftol = 1e-12;  // absolute spread of simplex values
  double xtol = 1e-10;  // max-norm extent of the simplex
  std::size_t max_evaluations = 4000;
};

struct NelderMeadResult {
  Vector x;
  double value = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

// Nelder-Mead with the dimension-adaptive coefficients of Gao and Han
// (reflection 1, expansion 1 + 2/n, contraction 3/4 - 1/(2n), shrink 1 - 1/n).
NelderMeadResult nelder_mead(const std::function<double(const Vector&)>& f, const Vector& x0,
                             const Vector& steps, const NelderMeadOptions& opts);

}  // namespace dramsey::detail
