#pragma once

namespace leodop {

// Physical and carrier constants for one scenario, plus the derived scalars
// every other module consumes. Immutable after construction.
struct SystemConstants {
  // Inputs
  double r_e;          // Earth radius [m]
  double h;            // satellite altitude [m]
  double f_o;          // carrier frequency [Hz]
  double c;            // speed of light [m/s]
  double mu_grav;      // gravitational parameter [m^3/s^2]
  double omega_e;      // Earth rotation rate, ECI [rad/s]
  double inclination;  // orbit inclination [rad]

  // Derived (recomputed eagerly on construction)
  double k;        // r_e / (r_e + h)
  double omega_s;  // orbital angular rate, ECI [rad/s]
  double omega_f;  // angular rate in the Earth-fixed frame [rad/s]
  double rho;      // Doppler ceiling f_o * r_e * omega_f / c [Hz]
  double phi_max;  // maximum visibility central angle, arccos(k) [rad]
};

// Validates inputs and populates the derived fields.
// Throws DomainError on non-positive lengths/frequencies or inclination
// outside [0, pi].
SystemConstants make_constants(double r_e, double h, double f_o, double c,
                               double mu_grav, double omega_e,
                               double inclination);

// Baseline scenario constants at the given altitude (default 600 km):
// r_e = 6371 km, f_o = 2 GHz, c = 3e8 m/s, mu = 3.986e14, omega_E = 7.27e-5,
// i = 53 deg.
SystemConstants default_constants(double h = 600e3);

}  // namespace leodop
