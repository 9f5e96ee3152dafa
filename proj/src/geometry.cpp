#include "leodop/geometry.hpp"

#include <cmath>
#include <numbers>

#include "leodop/errors.hpp"

namespace leodop {

SurfaceDirection::SurfaceDirection(const Vec3& v) {
  const double n = norm(v);
  if (n < 1e-12)
    throw DomainError("SurfaceDirection: vector too short to normalize");
  v_ = {v.x / n, v.y / n, v.z / n};
}

SphericalCap make_cap(const SurfaceDirection& center, double theta_c) {
  if (!(theta_c > 0.0 && theta_c < std::numbers::pi / 2.0))
    throw DomainError("make_cap: theta_c outside (0, pi/2)");
  return {center, theta_c};
}

double central_angle(const SurfaceDirection& a, const SurfaceDirection& b) {
  // atan2 form keeps full precision for nearly parallel or antiparallel
  // directions where acos(dot) loses digits.
  const Vec3 c = cross(a.vec(), b.vec());
  return std::atan2(norm(c), dot(a.vec(), b.vec()));
}

double cap_area(const SphericalCap& cap, double r_e) {
  return 2.0 * std::numbers::pi * r_e * r_e * (1.0 - std::cos(cap.theta_c));
}

SurfaceDirection sample_uniform_cap(const SphericalCap& cap, RngStream& rng) {
  const double cos_phi = rng.uniform(std::cos(cap.theta_c), 1.0);
  const double az = rng.uniform(0.0, 2.0 * std::numbers::pi);
  const double sin_phi = std::sqrt(std::max(0.0, 1.0 - cos_phi * cos_phi));
  const SurfaceDirection local(
      Vec3{sin_phi * std::cos(az), sin_phi * std::sin(az), cos_phi});
  return rotate_to_frame(local, cap.center);
}

SurfaceDirection rotate_to_frame(const SurfaceDirection& point,
                                 const SurfaceDirection& new_pole) {
  const Vec3 z{0.0, 0.0, 1.0};
  const Vec3 p = new_pole.vec();
  const Vec3 axis_raw = cross(z, p);
  const double s = norm(axis_raw);
  const double c = p.z;
  if (s < 1e-15) {
    // Pole along +/-z: identity or a half-turn about x.
    if (c > 0.0) return point;
    const Vec3 v = point.vec();
    return SurfaceDirection(Vec3{v.x, -v.y, -v.z});
  }
  const Vec3 axis = axis_raw * (1.0 / s);
  const double angle = std::atan2(s, c);
  return SurfaceDirection(rotate_about(point.vec(), axis, angle));
}

SurfaceDirection direction_from_lat_lon(double lat, double lon) {
  return SurfaceDirection(Vec3{std::cos(lat) * std::cos(lon),
                               std::cos(lat) * std::sin(lon), std::sin(lat)});
}

}  // namespace leodop
