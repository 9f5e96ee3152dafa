#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "leodop/angle_distribution.hpp"
#include "leodop/constants.hpp"
#include "leodop/geometry.hpp"
#include "leodop/kinematics.hpp"
#include "leodop/walker.hpp"

namespace leodop {

// Instantaneous great-circle fit of a satellite's Earth-fixed ground track:
// the circle through the current subsatellite point whose tangent follows
// the Earth-fixed velocity. All per-UE pass geometry (ups_t at the instant,
// ups_min over the pass) is measured against this model; its deviation from
// the true rotating-Earth track is quantified separately.
struct PassModel {
  Vec3 track_normal;  // unit, ECF
  Vec3 subpoint;      // unit, ECF, on the circle
};

PassModel fit_pass_model(const SatState& ecf_state);

// Minimum central angle from a surface point to the model ground track
// (spherical cross-track distance).
double ups_min_to_track(const SurfaceDirection& ue, const PassModel& pm);

// Instantaneous relation of a UE to a satellite; empty when the satellite
// is below the UE's horizon.
std::optional<SatUeGeometry> serving_geometry(const SurfaceDirection& ue,
                                              const Vec3& sat_pos_ecf,
                                              const SystemConstants& sc);

struct SimScenario {
  SystemConstants constants;
  WalkerStarConfig walker;
  SphericalCap cell;
  double t_eval = 0.0;
  int num_ues = 100000;
  std::uint64_t seed = 42;
};

// Serving satellite pick and the cell geometry it realizes at t_eval.
struct ServingGeometry {
  int plane = 0;
  int slot = 0;
  double theta_v = 0.0;
  double mu_ups_min = 0.0;
  PassModel pass;
  CellGeometry cell_geometry() const;  // needs theta_c; filled by the sim
  double theta_c = 0.0;
};

// Satellite with the smallest central angle to the cell center among those
// inside the common visibility region (ties by plane, then slot index).
// Throws DomainError when no satellite can serve the whole cell.
ServingGeometry select_serving(const SimScenario& scenario);

struct SimSamples {
  std::vector<double> doppler_hz;       // per-UE Doppler magnitude
  std::vector<double> ups_min_rad;      // per-UE minimum central angle
  std::vector<double> diff_doppler_hz;  // per-UE residual after compensation
  ServingGeometry serving;
  double common_doppler_hz = 0.0;
};

// Per-UE samples at the scenario instant. UEs are drawn uniformly in the
// cell in fixed-size chunks, each chunk on its own derived random stream;
// results are identical for any worker count. num_threads = 0 picks the
// hardware count.
SimSamples simulate_doppler_samples(const SimScenario& scenario,
                                    int num_threads = 0);

// Minimum central angle from a UE to the true rotating-Earth trajectory of
// one satellite over [t0, t1]: coarse scan plus golden refinement. Oracle
// for the great-circle approximation audit.
double min_ups_rotating_scan(const SurfaceDirection& ue,
                             const WalkerStarConfig& cfg,
                             const SystemConstants& sc, int plane, int slot,
                             double t0, double t1, int steps);

// Cell placement at a given cross-track offset from the ground track of
// satellite (plane, slot) at t_anchor; the cell center's closest approach
// then happens at t_anchor.
SphericalCap place_cell_track_relative(const WalkerStarConfig& cfg,
                                       const SystemConstants& sc, int plane,
                                       int slot, double t_anchor,
                                       double mu_offset, double theta_c);

// Time past closest approach at which the cell center sees the subsatellite
// point at theta_v_target (requires theta_v_target >= mu).
double eval_time_for_theta_v(double mu, double theta_v_target,
                             const SystemConstants& sc);

// Side-by-side sup-distances between the empirical Doppler CDF, the
// constant-angle analytical CDF, and the ground-track distribution bound
// (the bound evaluated both with our curved-geometry argument and as the
// prior flat-style reference that ignores the per-UE minimum angle).
struct FlatEarthReport {
  double sup_emp_vs_approx = 0.0;
  double sup_emp_vs_bound = 0.0;
  double sup_approx_vs_bound = 0.0;
  double bound_minus_emp_max = 0.0;  // positive values would break the bound
};

FlatEarthReport validate_flat_earth_comparison(const SimScenario& scenario,
                                               const EvalPolicy& policy = {});

}  // namespace leodop
