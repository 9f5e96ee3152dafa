#pragma once

#include "leodop/constants.hpp"

namespace leodop {

// One satellite pass as seen by a fixed surface point, under the
// great-circle ground-track model at constant Earth-fixed rate omega_f.
struct PassGeometry {
  double ups_min;  // minimum central angle over the pass [rad]
  double t_ref;    // instant of closest approach [s]
};

// Instantaneous satellite-UE relation.
struct SatUeGeometry {
  double ups_t;        // central angle [rad]
  double alpha_t;      // elevation [rad]
  double slant_range;  // [m]
};

// Central angle at time t: arccos(cos ups_min * cos(omega_f (t - t_ref))).
// Throws DomainError when the satellite is below the horizon at t.
double ups_from_time(const PassGeometry& pg, double t,
                     const SystemConstants& sc);

// Inverse of ups_from_time on the post-closest-approach branch:
// t = t_ref + arccos(cos ups / cos ups_min) / omega_f.
double time_from_ups(const PassGeometry& pg, double ups,
                     const SystemConstants& sc);

// Half-width of the visibility window around t_ref [s].
double visibility_half_window(const PassGeometry& pg,
                              const SystemConstants& sc);

// Elevation angle from the central angle:
// cos(alpha) = sin(ups) / sqrt(1 + k^2 - 2 k cos(ups)).
double elevation_from_ups(double ups, const SystemConstants& sc);

// Minimum central angle from the maximum elevation of a pass:
// arccos(k cos(alpha_max)) - alpha_max.
double ups_min_from_alpha_max(double alpha_max, const SystemConstants& sc);

// Slant range by the law of cosines: (r_e+h) sqrt(1 + k^2 - 2 k cos(ups)).
double slant_range(double ups, const SystemConstants& sc);

// Common visibility angle phi_max - theta_c: the satellite region within
// which every point of a cap of half-angle theta_c sees it.
double common_visibility_angle(double theta_c, const SystemConstants& sc);

}  // namespace leodop
