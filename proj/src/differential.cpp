#include "leodop/differential.hpp"

#include <cmath>

#include "leodop/doppler.hpp"
#include "leodop/doppler_distribution.hpp"
#include "leodop/errors.hpp"
#include "leodop/numerics.hpp"

namespace leodop {

double common_doppler(const CellGeometry& cell, const SystemConstants& sc) {
  if (cell.theta_v > sc.phi_max + 1e-12)
    throw DomainError("common_doppler: cell center beyond visibility");
  return doppler_magnitude(cell.theta_v, cell.mu_ups_min, sc);
}

double diff_doppler_cdf(double zeta_hz, const CellGeometry& cell,
                        const SystemConstants& sc, const EvalPolicy& policy) {
  return doppler_cdf_approx(zeta_hz + common_doppler(cell, sc), cell, sc,
                            policy);
}

double diff_doppler_pdf(double zeta_hz, const CellGeometry& cell,
                        const SystemConstants& sc, const EvalPolicy& policy) {
  return doppler_pdf(zeta_hz + common_doppler(cell, sc), cell, sc, policy);
}

double max_diff_doppler(double theta_v, double theta_c,
                        const SystemConstants& sc) {
  if (theta_v < 0.0) throw DomainError("max_diff_doppler: negative theta_v");
  if (theta_c <= 0.0) throw DomainError("max_diff_doppler: theta_c <= 0");
  if (theta_v + theta_c > sc.phi_max + 1e-12)
    throw DomainError(
        "max_diff_doppler: cell partly beyond the horizon at this theta_v");
  const double far = doppler_ground_track(theta_v + theta_c, sc);
  const double near =
      theta_v < theta_c ? 0.0 : doppler_ground_track(theta_v - theta_c, sc);
  return std::abs(far - near);
}

namespace {

// Worst differential Doppler over the common visibility range of satellite
// positions for a given sub-cell size. Unimodal in theta_v with the peak at
// the cell edge; golden-section keeps that an implementation detail.
std::pair<double, double> residual_peak(double theta_c,
                                        const SystemConstants& sc,
                                        double golden_tol) {
  const double hi = sc.phi_max - theta_c;
  if (hi <= 0.0)
    throw DomainError("plan_clusters: sub-cell exceeds visibility");
  return golden_max(
      [&](double tv) { return max_diff_doppler(tv, theta_c, sc); }, 0.0, hi,
      golden_tol);
}

}  // namespace

ClusterPlan plan_clusters(double parent_theta_c, double threshold_hz,
                          const SystemConstants& sc, const RootConfig& rcfg,
                          RoundingMode rounding) {
  if (parent_theta_c <= 0.0 || parent_theta_c >= sc.phi_max)
    throw DomainError("plan_clusters: parent cell invalid");
  if (threshold_hz <= 0.0)
    throw DomainError("plan_clusters: threshold must be positive");

  ClusterPlan plan;
  plan.threshold_hz = threshold_hz;

  const auto [parent_argmax, parent_peak] =
      residual_peak(parent_theta_c, sc, rcfg.golden_tol);
  double sub = parent_theta_c;
  if (parent_peak > threshold_hz) {
    sub = bisect_largest_feasible(
        [&](double theta) {
          return residual_peak(theta, sc, rcfg.golden_tol).second <=
                 threshold_hz;
        },
        1e-12, parent_theta_c, rcfg.bisect_tol);
  }

  const auto [argmax, peak] = residual_peak(sub, sc, rcfg.golden_tol);
  plan.sub_theta_c = sub;
  plan.residual_max_hz = peak;
  plan.residual_argmax_theta_v = argmax;
  plan.cluster_count_exact =
      (1.0 - std::cos(parent_theta_c)) / (1.0 - std::cos(sub));
  switch (rounding) {
    case RoundingMode::kFloor:
      plan.cluster_count_reported =
          static_cast<long long>(std::floor(plan.cluster_count_exact));
      break;
    case RoundingMode::kCeil:
      plan.cluster_count_reported =
          static_cast<long long>(std::ceil(plan.cluster_count_exact));
      break;
    case RoundingMode::kNearest:
      plan.cluster_count_reported = std::llround(plan.cluster_count_exact);
      break;
  }
  return plan;
}

}  // namespace leodop
