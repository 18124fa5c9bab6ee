#pragma once

#include <string_view>

#include "dramsey/geom.hpp"

namespace dramsey {

// The circumradius criterion is one-directional: a set either carries the
// obstruction or nothing is concluded. There is deliberately no
// "diameter-Ramsey" status.
enum class VerdictStatus { NotDiameterRamsey, Unknown };

std::string_view verdict_status_name(VerdictStatus s) noexcept;

struct Verdict {
  VerdictStatus status = VerdictStatus::Unknown;
  double circumradius = 0.0;
  double diameter = 0.0;
  double threshold = 0.0;  // diameter / sqrt(2)
  double margin = 0.0;     // circumradius - threshold
};

/// NotDiameterRamsey iff circ(C) > diam(C)/sqrt(2) + tol * diam(C).
/// Throws NotSpherical for sets on no sphere.
Verdict obstruction_verdict(const Configuration& c, double tol = kDefaultTol);

/// a / (2 sin alpha); alpha in degrees, 0 < alpha < 180, a > 0.
double triangle_circumradius(double a, double alpha_deg);

inline constexpr double kCriticalAngleDeg = 135.0;
inline constexpr double kAngleTolDeg = 1e-9;

/// Verdict for a triangle whose largest angle is alpha (degrees) opposite the
/// side of length a (its diameter).
Verdict classify_triangle(double alpha_deg, double a);

enum class ConjectureLabel { ConjecturedDiameterRamsey, ConjecturedNotDiameterRamsey };

std::string_view conjecture_label_name(ConjectureLabel l) noexcept;

/// Prediction of the circumcentre-in-hull conjecture for a simplex. The result
/// is conjectural, not a theorem. Throws NotSimplex.
ConjectureLabel conjecture_classification(const Configuration& c, double tol = kDefaultTol);

}  // namespace dramsey
