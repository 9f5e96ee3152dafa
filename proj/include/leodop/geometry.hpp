#pragma once

#include "leodop/rng.hpp"
#include "leodop/vec3.hpp"

namespace leodop {

// Unit vector on the sphere. Construction normalizes and rejects
// near-zero input.
class SurfaceDirection {
 public:
  explicit SurfaceDirection(const Vec3& v);
  const Vec3& vec() const { return v_; }

 private:
  Vec3 v_;
};

// All points within central angle theta_c of center.
struct SphericalCap {
  SurfaceDirection center;
  double theta_c;  // rad, in (0, pi/2)
};

SphericalCap make_cap(const SurfaceDirection& center, double theta_c);

// Central angle between two directions, in [0, pi].
double central_angle(const SurfaceDirection& a, const SurfaceDirection& b);

// Spherical area of the cap on a sphere of radius r_e: 2 pi r_e^2 (1 - cos).
double cap_area(const SphericalCap& cap, double r_e);

// Uniform-by-area sample inside the cap: cos(angle to center) uniform on
// [cos theta_c, 1], azimuth uniform, rotated into the cap frame.
SurfaceDirection sample_uniform_cap(const SphericalCap& cap, RngStream& rng);

// Applies the rotation that carries the +z axis onto new_pole.
SurfaceDirection rotate_to_frame(const SurfaceDirection& point,
                                 const SurfaceDirection& new_pole);

// Surface direction from geodetic-style latitude/longitude (radians).
SurfaceDirection direction_from_lat_lon(double lat, double lon);

}  // namespace leodop
