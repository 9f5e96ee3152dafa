#pragma once

#include "leodop/constants.hpp"

namespace leodop {

// Signed Doppler observation. Positive while the satellite approaches the
// closest point of the pass, negative while it recedes, zero at closest
// approach.
struct DopplerSample {
  double magnitude_hz;
  int sign;  // +1 approaching, -1 receding, 0 at the reference instant
};

// Doppler shift magnitude at central angle ups_t for a pass with minimum
// central angle ups_min:
//   rho * sqrt(cos^2 ups_min - cos^2 ups_t) / sqrt(1 + k^2 - 2 k cos ups_t).
// A radicand within -1e-14 of zero is treated as round-off and clamped;
// anything more negative is a caller error (ups_t < ups_min).
double doppler_magnitude(double ups_t, double ups_min,
                         const SystemConstants& sc);

// Ground-track special case (ups_min = 0):
//   rho * sin(ups_t) / sqrt(1 + k^2 - 2 k cos ups_t).
double doppler_ground_track(double ups_t, const SystemConstants& sc);

// Small-angle approximation of doppler_magnitude:
//   rho * sqrt((ups_t^2 - ups_min^2) / ((h/(r_e+h))^2 + (r_e/(r_e+h)) ups_t^2))
double doppler_small_angle(double ups_t, double ups_min,
                           const SystemConstants& sc);

// Small-angle ground-track form and its inverse (angle from magnitude).
// The inverse returns the central angle whose small-angle Doppler is s_hz;
// it backs the distribution upper bound.
double doppler_small_angle_ground_track(double ups_t,
                                        const SystemConstants& sc);
double ups_from_small_angle_doppler(double s_hz, const SystemConstants& sc);

// Magnitude from doppler_magnitude, sign from the time position relative to
// closest approach (t - t_ref).
DopplerSample doppler_signed(double ups_t, double ups_min, double t_minus_tref,
                             const SystemConstants& sc);

}  // namespace leodop
