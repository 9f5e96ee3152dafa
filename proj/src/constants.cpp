#include "leodop/constants.hpp"

#include <cmath>
#include <numbers>

#include "leodop/errors.hpp"

namespace leodop {

SystemConstants make_constants(double r_e, double h, double f_o, double c,
                               double mu_grav, double omega_e,
                               double inclination) {
  if (r_e <= 0.0) throw DomainError("make_constants: r_e must be positive");
  if (h <= 0.0) throw DomainError("make_constants: h must be positive");
  if (f_o <= 0.0) throw DomainError("make_constants: f_o must be positive");
  if (c <= 0.0) throw DomainError("make_constants: c must be positive");
  if (mu_grav <= 0.0) throw DomainError("make_constants: mu must be positive");
  if (omega_e < 0.0) throw DomainError("make_constants: omega_E negative");
  if (inclination < 0.0 || inclination > std::numbers::pi)
    throw DomainError("make_constants: inclination outside [0, pi]");

  SystemConstants sc;
  sc.r_e = r_e;
  sc.h = h;
  sc.f_o = f_o;
  sc.c = c;
  sc.mu_grav = mu_grav;
  sc.omega_e = omega_e;
  sc.inclination = inclination;

  sc.k = r_e / (r_e + h);
  sc.omega_s = std::sqrt(mu_grav / std::pow(r_e + h, 3));
  sc.omega_f = sc.omega_s - omega_e * std::cos(inclination);
  sc.rho = f_o * r_e * sc.omega_f / c;
  sc.phi_max = std::acos(sc.k);

  if (sc.omega_f <= 0.0)
    throw DomainError("make_constants: omega_F must be positive");
  return sc;
}

SystemConstants default_constants(double h) {
  return make_constants(6371e3, h, 2e9, 3e8, 3.986e14, 7.27e-5,
                        53.0 * std::numbers::pi / 180.0);
}

}  // namespace leodop
