#pragma once

#include "leodop/constants.hpp"
#include "leodop/vec3.hpp"

namespace leodop {

// Walker-star shell: orbital planes spread evenly over half a turn of
// right ascension, equally spaced satellites per plane, optional per-plane
// phase offset. Plane 0 / slot 0 sits at its ascending node at t = 0;
// the Earth-fixed frame is aligned with the inertial frame at t = 0.
struct WalkerStarConfig {
  int num_planes = 1;
  int sats_per_plane = 1;
  double inclination = 0.0;   // rad
  double altitude = 600e3;    // m
  double phase_offset = 0.0;  // rad, in-plane shift between adjacent planes
};

struct SatState {
  Vec3 position;  // m
  Vec3 velocity;  // m/s
};

// Position/velocity of satellite (plane, slot) in the inertial frame.
SatState sat_state_eci(const WalkerStarConfig& cfg, const SystemConstants& sc,
                       int plane, int slot, double t);

// Same state rotated into the Earth-fixed frame (rotation by -omega_E t
// about z, with the frames aligned at t = 0).
SatState sat_state_ecf(const WalkerStarConfig& cfg, const SystemConstants& sc,
                       int plane, int slot, double t);

}  // namespace leodop
