#pragma once

#include "leodop/angle_distribution.hpp"
#include "leodop/constants.hpp"

namespace leodop {

// Common Doppler at the cell's reference point (its center): the value that
// pre-/post-compensation removes for every UE in the cell.
double common_doppler(const CellGeometry& cell, const SystemConstants& sc);

// Residual (differential) Doppler distribution after compensating the
// common part: F(z) = F_doppler(z + D_t), f(z) = f_doppler(z + D_t).
double diff_doppler_cdf(double zeta_hz, const CellGeometry& cell,
                        const SystemConstants& sc,
                        const EvalPolicy& policy = {});
double diff_doppler_pdf(double zeta_hz, const CellGeometry& cell,
                        const SystemConstants& sc,
                        const EvalPolicy& policy = {});

// Largest instantaneous Doppler difference between two points of a cap of
// half-angle theta_c whose center is theta_v from the subsatellite point,
// in the worst case of both extreme points on the ground track:
//   P_t inside the cell:  |d_gt(theta_v + theta_c) - d_gt(0)|
//   P_t outside:          |d_gt(theta_v + theta_c) - d_gt(theta_v - theta_c)|
// (approaching and receding give the same magnitude).
// Requires theta_v + theta_c <= phi_max.
double max_diff_doppler(double theta_v, double theta_c,
                        const SystemConstants& sc);

enum class RoundingMode { kFloor, kCeil, kNearest };

struct RootConfig {
  double bisect_tol = 1e-7;  // rad, on the sub-cell half-angle
  double golden_tol = 1e-9;  // rad, on the residual-peak location
};

// Cluster plan: the largest sub-cell half-angle whose worst-case
// differential Doppler stays below the threshold anywhere in the common
// visibility region, plus the resulting cluster count for the parent cell.
struct ClusterPlan {
  double threshold_hz;
  double sub_theta_c;
  double cluster_count_exact;
  long long cluster_count_reported;
  double residual_max_hz;
  double residual_argmax_theta_v;
};

ClusterPlan plan_clusters(double parent_theta_c, double threshold_hz,
                          const SystemConstants& sc,
                          const RootConfig& rcfg = {},
                          RoundingMode rounding = RoundingMode::kFloor);

}  // namespace leodop
