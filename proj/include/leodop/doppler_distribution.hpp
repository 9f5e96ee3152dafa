#pragma once

#include "leodop/angle_distribution.hpp"
#include "leodop/constants.hpp"

namespace leodop {

// cos of the central-angle threshold below which the Doppler magnitude stays
// under s, for a pass with minimum central angle ups_min. This is the larger
// root of rho^2 x^2 - 2 s^2 k x + s^2 (1 + k^2) - rho^2 cos^2(ups_min); the
// smaller root always lies below cos(phi_max) and never enters the visible
// range. Throws DomainError when the discriminant is negative (s exceeds the
// Doppler attainable for this ups_min).
double cos_ups_threshold(double s_hz, double ups_min,
                         const SystemConstants& sc);

// Expectation of the threshold-angle CDF over the per-UE minimum central
// angle, by Gauss-Legendre quadrature on each smooth piece of the density.
struct IntegrationCfg {
  int gl_nodes = 64;
  bool convergence_check = false;  // re-evaluate with doubled nodes
  double check_tol = 1e-6;
};

double doppler_cdf_exact(double s_hz, const CellGeometry& cell,
                         const SystemConstants& sc,
                         const IntegrationCfg& icfg = {},
                         const EvalPolicy& policy = {});

// Constant minimum-central-angle approximation: the cell center's own
// mu_ups_min stands in for every UE's. Total in s: 0 below, 1 above the
// attainable range.
double doppler_cdf_approx(double s_hz, const CellGeometry& cell,
                          const SystemConstants& sc,
                          const EvalPolicy& policy = {});

// Density of the Doppler magnitude: chain rule through the threshold angle.
// Zero outside the attainable open range.
double doppler_pdf(double s_hz, const CellGeometry& cell,
                   const SystemConstants& sc, const EvalPolicy& policy = {});

// Distribution bound from the ground-track small-angle Doppler form.
// It bounds the Doppler magnitude from above, so its CDF sits at or below
// the cell's true CDF.
double doppler_cdf_upper_bound(double s_hz, const CellGeometry& cell,
                               const SystemConstants& sc,
                               const EvalPolicy& policy = {});

}  // namespace leodop
