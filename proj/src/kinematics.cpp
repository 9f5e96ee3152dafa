#include "leodop/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "leodop/errors.hpp"

namespace leodop {

namespace {

// Angles within round-off of the visibility edge are clamped rather than
// rejected; arccos at the domain edge is the usual culprit.
constexpr double kEdgeTol = 1e-12;

double checked_ups(double ups, const SystemConstants& sc, const char* where) {
  if (ups < 0.0 && ups >= -kEdgeTol) return 0.0;
  if (ups > sc.phi_max && ups <= sc.phi_max + kEdgeTol) return sc.phi_max;
  if (ups < 0.0 || ups > sc.phi_max)
    throw DomainError(std::string(where) + ": ups outside [0, phi_max]");
  return ups;
}

}  // namespace

double ups_from_time(const PassGeometry& pg, double t,
                     const SystemConstants& sc) {
  const double half = visibility_half_window(pg, sc);
  const double dt = t - pg.t_ref;
  if (std::abs(dt) > half * (1.0 + 1e-12))
    throw DomainError("ups_from_time: satellite below horizon at t");
  const double c = std::cos(pg.ups_min) * std::cos(sc.omega_f * dt);
  return std::acos(std::clamp(c, -1.0, 1.0));
}

double time_from_ups(const PassGeometry& pg, double ups,
                     const SystemConstants& sc) {
  ups = checked_ups(ups, sc, "time_from_ups");
  const double r = std::cos(ups) / std::cos(pg.ups_min);
  if (r > 1.0 + kEdgeTol)
    throw DomainError("time_from_ups: ups below ups_min");
  return pg.t_ref + std::acos(std::clamp(r, -1.0, 1.0)) / sc.omega_f;
}

double visibility_half_window(const PassGeometry& pg,
                              const SystemConstants& sc) {
  const double r = std::cos(sc.phi_max) / std::cos(pg.ups_min);
  return std::acos(std::clamp(r, -1.0, 1.0)) / sc.omega_f;
}

double elevation_from_ups(double ups, const SystemConstants& sc) {
  ups = checked_ups(ups, sc, "elevation_from_ups");
  const double denom =
      std::sqrt(1.0 + sc.k * sc.k - 2.0 * sc.k * std::cos(ups));
  const double c = std::sin(ups) / denom;
  return std::acos(std::clamp(c, -1.0, 1.0));
}

double ups_min_from_alpha_max(double alpha_max, const SystemConstants& sc) {
  if (alpha_max < 0.0 || alpha_max > std::numbers::pi / 2.0 + kEdgeTol)
    throw DomainError("ups_min_from_alpha_max: alpha outside [0, pi/2]");
  return std::acos(sc.k * std::cos(alpha_max)) - alpha_max;
}

double slant_range(double ups, const SystemConstants& sc) {
  ups = checked_ups(ups, sc, "slant_range");
  return (sc.r_e + sc.h) *
         std::sqrt(1.0 + sc.k * sc.k - 2.0 * sc.k * std::cos(ups));
}

double common_visibility_angle(double theta_c, const SystemConstants& sc) {
  if (theta_c >= sc.phi_max)
    throw DomainError("common_visibility_angle: cell exceeds visibility");
  if (theta_c < 0.0)
    throw DomainError("common_visibility_angle: negative theta_c");
  return sc.phi_max - theta_c;
}

}  // namespace leodop
