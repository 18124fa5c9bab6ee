#include "dramsey/obstruction.hpp"

#include <cmath>
#include <numbers>

#include "dramsey/error.hpp"
#include "dramsey/spheres.hpp"

namespace dramsey {

std::string_view verdict_status_name(VerdictStatus s) noexcept {
  return s == VerdictStatus::NotDiameterRamsey ? "NotDiameterRamsey" : "Unknown";
}

std::string_view conjecture_label_name(ConjectureLabel l) noexcept {
  return l == ConjectureLabel::ConjecturedDiameterRamsey ? "ConjecturedDiameterRamsey"
                                                         : "ConjecturedNotDiameterRamsey";
}

namespace {

Verdict make_verdict(double circ, double diam, bool obstructed) {
  Verdict v;
  v.circumradius = circ;
  v.diameter = diam;
  v.threshold = diam / std::numbers::sqrt2;
  v.margin = circ - v.threshold;
  v.status = obstructed ? VerdictStatus::NotDiameterRamsey : VerdictStatus::Unknown;
  return v;
}

double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }

}  // namespace

Verdict obstruction_verdict(const Configuration& c, double tol) {
  const double circ = circumsphere(c, tol).radius;
  const double diam = diameter(c);
  const double threshold = diam / std::numbers::sqrt2;
  return make_verdict(circ, diam, circ > threshold + tol * diam);
}

double triangle_circumradius(double a, double alpha_deg) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw Error(ErrorCode::DomainError, "side length must be positive and finite");
  }
  if (!(alpha_deg > 0.0 && alpha_deg < 180.0)) {
    throw Error(ErrorCode::DomainError, "angle must lie strictly between 0 and 180 degrees");
  }
  return a / (2.0 * std::sin(deg_to_rad(alpha_deg)));
}

Verdict classify_triangle(double alpha_deg, double a) {
  if (!(alpha_deg >= 60.0)) {
    throw Error(ErrorCode::DomainError, "the largest angle of a triangle is at least 60 degrees");
  }
  const double circ = triangle_circumradius(a, alpha_deg);
  return make_verdict(circ, a, alpha_deg > kCriticalAngleDeg + kAngleTolDeg);
}

ConjectureLabel conjecture_classification(const Configuration& c, double tol) {
  return circumcenter_in_hull(c, tol) ? ConjectureLabel::ConjecturedDiameterRamsey
                                      : ConjectureLabel::ConjecturedNotDiameterRamsey;
}

}  // namespace dramsey
