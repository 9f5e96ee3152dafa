#pragma once

#include <vector>

#include "leodop/constants.hpp"

namespace leodop {

// Cell geometry relative to the serving satellite: cap half-angle theta_c,
// central angle theta_v from the cell center to the subsatellite point, and
// the minimum central angle mu_ups_min the cell center attains over the pass.
struct CellGeometry {
  double theta_c;
  double theta_v;
  double mu_ups_min;
};

// Validates 0 < theta_c < pi/2, theta_v >= 0, 0 <= mu_ups_min <= theta_v.
CellGeometry make_cell(double theta_c, double theta_v, double mu_ups_min);

// Case of the piecewise central-angle CDF. Exactly one case applies per
// (gamma, theta_c, theta_v); predicates are evaluated in listed order with
// case 4 as the residual, which resolves boundary overlaps deterministically.
enum class CaseTag { kCase1 = 1, kCase2 = 2, kCase3 = 3, kCase4 = 4 };

struct CaseInfo {
  CaseTag tag;
  bool projection_inside;  // theta_v < theta_c
};

CaseInfo select_case(double gamma, double theta_c, double theta_v);

// Boundary colatitude of the cap-intersection lune for cases 2-4.
// Not defined for case 1 or theta_v = 0 (throws DomainError).
double theta_min_branch(double gamma, double theta_c, double theta_v,
                        CaseTag tag);

// d(theta_min)/d(gamma) for cases 2-4.
double theta_min_derivative(double gamma, double theta_c, double theta_v,
                            CaseTag tag);

// How the lune kernel V_{u,v} inside the CDF is evaluated.
//
// The truncated series is the paper-style fast path but its truncation error
// scales like 0.1 * v^2 when u << v, which case boundaries always produce;
// assembled CDFs then drift by several percent. Quadrature is therefore the
// default; the series stays available for cap-scale experiments and keeps a
// quadrature fallback when u^2/v^2 exceeds series_z_fallback (slow 3F2
// convergence near 1).
enum class VMethod { kQuadrature, kSeries };

struct EvalPolicy {
  VMethod v_method = VMethod::kQuadrature;
  int series_n_max = 2;
  double cdf_abs_tol = 1e-9;        // error budget on the assembled CDF
  double series_z_fallback = 0.99;  // series -> quadrature above this z
};

// Counts CDF/PDF assembly results that needed clamping into [0, 1] by more
// than 1e-9; such clamps indicate a formula regression, not round-off.
struct EvalDiagnostics {
  int clamp_warnings = 0;
  double max_clamp = 0.0;
};

// V_{u,v} = integral_u^v sin(phi) I_{1-(tan u / tan phi)^2}(1/2,1/2) dphi.
// u = 0 reduces to 1 - cos(v); v <= u gives 0. Throws DomainError for
// u < 0 beyond round-off.
double v_kernel_quadrature(double u, double v, double abs_tol = 1e-12);

// Series approximation of V_{u,v} truncated at n_max (inclusive).
double v_kernel_series(double u, double v, int n_max);

// d/dgamma of the series approximation, given du/dgamma and dv/dgamma.
double v_kernel_derivative(double u, double v, double du_dgamma,
                           double dv_dgamma, int n_max);

// Exact d/dgamma of V_{u,v} by Leibniz rule plus quadrature of the
// u-sensitivity kernel.
double v_kernel_derivative_quadrature(double u, double v, double du_dgamma,
                                      double dv_dgamma,
                                      double abs_tol = 1e-12);

// CDF of the central angle between a uniform point of the cell and the
// subsatellite point. Total on [0, pi]: 0 below the support, 1 above it.
double central_angle_cdf(double gamma, const CellGeometry& cell,
                         const EvalPolicy& policy = {},
                         EvalDiagnostics* diag = nullptr);

// Density of the central angle; zero outside the open support.
double central_angle_pdf(double gamma, const CellGeometry& cell,
                         const EvalPolicy& policy = {});

// Gamma values at which the case predicates switch, including the support
// edges. Sorted ascending.
std::vector<double> case_boundary_knots(const CellGeometry& cell);

// Distribution of the per-UE minimum central angle over a pass,
// approximated by the central-angle CDF with theta_v set to the cell
// center's own minimum central angle.
double ups_min_cdf(double gamma_min, double theta_c, double mu_ups_min,
                   const EvalPolicy& policy = {});
double ups_min_pdf(double gamma_min, double theta_c, double mu_ups_min,
                   const EvalPolicy& policy = {});

}  // namespace leodop
