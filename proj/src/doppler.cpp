#include "leodop/doppler.hpp"

#include <cmath>

#include "leodop/errors.hpp"

namespace leodop {

namespace {
constexpr double kRadicandTol = -1e-14;
}

double doppler_magnitude(double ups_t, double ups_min,
                         const SystemConstants& sc) {
  if (ups_min < 0.0) throw DomainError("doppler_magnitude: negative ups_min");
  const double cm = std::cos(ups_min);
  const double ct = std::cos(ups_t);
  double rad = cm * cm - ct * ct;
  if (rad < 0.0) {
    if (rad < kRadicandTol)
      throw DomainError("doppler_magnitude: ups_t < ups_min");
    rad = 0.0;
  }
  const double denom = std::sqrt(1.0 + sc.k * sc.k - 2.0 * sc.k * ct);
  return sc.rho * std::sqrt(rad) / denom;
}

double doppler_ground_track(double ups_t, const SystemConstants& sc) {
  const double ct = std::cos(ups_t);
  const double denom = std::sqrt(1.0 + sc.k * sc.k - 2.0 * sc.k * ct);
  return sc.rho * std::abs(std::sin(ups_t)) / denom;
}

double doppler_small_angle(double ups_t, double ups_min,
                           const SystemConstants& sc) {
  if (ups_min < 0.0) throw DomainError("doppler_small_angle: negative ups_min");
  double num = ups_t * ups_t - ups_min * ups_min;
  if (num < 0.0) {
    if (num < kRadicandTol)
      throw DomainError("doppler_small_angle: ups_t < ups_min");
    num = 0.0;
  }
  const double a = sc.h / (sc.r_e + sc.h);
  const double b = sc.r_e / (sc.r_e + sc.h);
  return sc.rho * std::sqrt(num / (a * a + b * ups_t * ups_t));
}

double doppler_small_angle_ground_track(double ups_t,
                                        const SystemConstants& sc) {
  const double denom =
      std::sqrt(sc.h * sc.h + sc.r_e * (sc.r_e + sc.h) * ups_t * ups_t);
  return sc.rho * (sc.r_e + sc.h) * ups_t / denom;
}

double ups_from_small_angle_doppler(double s_hz, const SystemConstants& sc) {
  const double rad = sc.rho * sc.rho - (sc.r_e / (sc.r_e + sc.h)) * s_hz * s_hz;
  if (rad <= 0.0)
    throw DomainError("ups_from_small_angle_doppler: s above the ceiling");
  return (sc.h / (sc.r_e + sc.h)) * s_hz / std::sqrt(rad);
}

DopplerSample doppler_signed(double ups_t, double ups_min, double t_minus_tref,
                             const SystemConstants& sc) {
  const double mag = doppler_magnitude(ups_t, ups_min, sc);
  int sign = 0;
  if (t_minus_tref < 0.0) sign = +1;
  else if (t_minus_tref > 0.0) sign = -1;
  return {mag, sign};
}

}  // namespace leodop
