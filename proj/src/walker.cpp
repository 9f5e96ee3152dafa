#include "leodop/walker.hpp"

#include <cmath>
#include <numbers>

#include "leodop/errors.hpp"

namespace leodop {

SatState sat_state_eci(const WalkerStarConfig& cfg, const SystemConstants& sc,
                       int plane, int slot, double t) {
  if (plane < 0 || plane >= cfg.num_planes || slot < 0 ||
      slot >= cfg.sats_per_plane)
    throw DomainError("sat_state_eci: satellite index out of range");

  const double a = sc.r_e + cfg.altitude;
  const double raan = plane * std::numbers::pi / cfg.num_planes;
  const double anomaly = sc.omega_s * t +
                         2.0 * std::numbers::pi * slot / cfg.sats_per_plane +
                         plane * cfg.phase_offset;

  const double ci = std::cos(cfg.inclination);
  const double si = std::sin(cfg.inclination);
  const Vec3 p1{std::cos(raan), std::sin(raan), 0.0};
  const Vec3 p2{-std::sin(raan) * ci, std::cos(raan) * ci, si};

  const double cu = std::cos(anomaly), su = std::sin(anomaly);
  SatState st;
  st.position = (p1 * cu + p2 * su) * a;
  st.velocity = (p1 * (-su) + p2 * cu) * (a * sc.omega_s);
  return st;
}

SatState sat_state_ecf(const WalkerStarConfig& cfg, const SystemConstants& sc,
                       int plane, int slot, double t) {
  const SatState eci = sat_state_eci(cfg, sc, plane, slot, t);
  const Vec3 z{0.0, 0.0, 1.0};
  const double angle = -sc.omega_e * t;
  SatState ecf;
  ecf.position = rotate_about(eci.position, z, angle);
  // transport term: d/dt of the frame rotation
  const Vec3 v_rel = eci.velocity - cross(z, eci.position) * sc.omega_e;
  ecf.velocity = rotate_about(v_rel, z, angle);
  return ecf;
}

}  // namespace leodop
