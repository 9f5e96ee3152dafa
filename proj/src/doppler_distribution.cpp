#include "leodop/doppler_distribution.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "leodop/errors.hpp"
#include "leodop/numerics.hpp"

namespace leodop {

namespace {

// Discriminant of the threshold quadratic; negative means s is above the
// Doppler ceiling for this ups_min.
double threshold_disc(double s, double ups_min, const SystemConstants& sc) {
  const double s2 = s * s;
  const double r2 = sc.rho * sc.rho;
  const double cm = std::cos(ups_min);
  return s2 * s2 * sc.k * sc.k -
         r2 * (s2 * (1.0 + sc.k * sc.k) - r2 * cm * cm);
}

std::optional<double> cos_threshold_opt(double s, double ups_min,
                                        const SystemConstants& sc) {
  const double disc = threshold_disc(s, ups_min, sc);
  if (disc < 0.0) return std::nullopt;
  const double r2 = sc.rho * sc.rho;
  const double x = (s * s * sc.k + std::sqrt(disc)) / r2;
  return std::clamp(x, -1.0, 1.0);
}

}  // namespace

double cos_ups_threshold(double s_hz, double ups_min,
                         const SystemConstants& sc) {
  if (s_hz < 0.0) throw DomainError("cos_ups_threshold: negative s");
  if (ups_min < 0.0 || ups_min > sc.phi_max)
    throw DomainError("cos_ups_threshold: ups_min outside [0, phi_max]");
  const auto x = cos_threshold_opt(s_hz, ups_min, sc);
  if (!x)
    throw DomainError(
        "cos_ups_threshold: s exceeds attainable Doppler for this ups_min");
  return *x;
}

double doppler_cdf_approx(double s_hz, const CellGeometry& cell,
                          const SystemConstants& sc,
                          const EvalPolicy& policy) {
  if (s_hz < 0.0) return 0.0;
  const auto x = cos_threshold_opt(s_hz, cell.mu_ups_min, sc);
  if (!x) return 1.0;  // above the ceiling for every UE
  const double gamma = std::acos(*x);
  return central_angle_cdf(gamma, cell, policy);
}

double doppler_cdf_exact(double s_hz, const CellGeometry& cell,
                         const SystemConstants& sc, const IntegrationCfg& icfg,
                         const EvalPolicy& policy) {
  if (s_hz < 0.0) return 0.0;

  const CellGeometry min_cell{cell.theta_c, cell.mu_ups_min, cell.mu_ups_min};
  const auto knots = case_boundary_knots(min_cell);

  auto inner = [&](double ups_min) {
    const auto x = cos_threshold_opt(s_hz, ups_min, sc);
    if (!x) return 1.0;
    return central_angle_cdf(std::acos(*x), cell, policy);
  };

  auto expectation = [&](int nodes) {
    const GaussLegendre& gl = gauss_legendre(nodes);
    double total = 0.0;
    for (std::size_t seg = 0; seg + 1 < knots.size(); ++seg) {
      const double a = knots[seg], b = knots[seg + 1];
      const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
      for (int i = 0; i < nodes; ++i) {
        const double g = mid + half * gl.nodes[i];
        const double w = half * gl.weights[i];
        total +=
            w * ups_min_pdf(g, cell.theta_c, cell.mu_ups_min, policy) *
            inner(g);
      }
    }
    return total;
  };

  double value = expectation(icfg.gl_nodes);
  if (icfg.convergence_check) {
    const double refined = expectation(2 * icfg.gl_nodes);
    if (std::abs(refined - value) > icfg.check_tol)
      throw DomainError("doppler_cdf_exact: quadrature did not converge");
    value = refined;
  }
  return std::clamp(value, 0.0, 1.0);
}

double doppler_pdf(double s_hz, const CellGeometry& cell,
                   const SystemConstants& sc, const EvalPolicy& policy) {
  if (s_hz <= 0.0) return 0.0;
  const auto x = cos_threshold_opt(s_hz, cell.mu_ups_min, sc);
  if (!x) return 0.0;
  const double gamma = std::acos(*x);
  const double lo = std::max(0.0, cell.theta_v - cell.theta_c);
  const double hi = cell.theta_v + cell.theta_c;
  if (gamma <= lo || gamma >= hi) return 0.0;

  const double disc = threshold_disc(s_hz, cell.mu_ups_min, sc);
  const double r2 = sc.rho * sc.rho;
  const double s2 = s_hz * s_hz;
  // d/ds of the larger quadratic root
  const double dxds =
      (2.0 * s_hz * sc.k +
       s_hz * (2.0 * s2 * sc.k * sc.k - r2 * (1.0 + sc.k * sc.k)) /
           std::sqrt(disc)) /
      r2;
  const double sin_g = std::sqrt(std::max(1.0 - *x * *x, 0.0));
  if (sin_g == 0.0) return 0.0;
  const double dgds = -dxds / sin_g;
  return std::max(0.0, central_angle_pdf(gamma, cell, policy) * dgds);
}

double doppler_cdf_upper_bound(double s_hz, const CellGeometry& cell,
                               const SystemConstants& sc,
                               const EvalPolicy& policy) {
  if (s_hz < 0.0) return 0.0;
  const double rad =
      sc.rho * sc.rho - (sc.r_e / (sc.r_e + sc.h)) * s_hz * s_hz;
  if (rad <= 0.0) return 1.0;
  const double gamma = (sc.h / (sc.r_e + sc.h)) * s_hz / std::sqrt(rad);
  if (gamma >= cell.theta_v + cell.theta_c) return 1.0;
  return central_angle_cdf(gamma, cell, policy);
}

}  // namespace leodop
