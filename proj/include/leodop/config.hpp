#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "leodop/angle_distribution.hpp"
#include "leodop/differential.hpp"

namespace leodop {

// Full run configuration. Defaults reproduce the baseline scenario
// (600 km / 2 GHz / 50 km cells) and the documented numeric defaults;
// every key can be overridden from a flat INI-style config file.
struct RunConfig {
  // [constants]
  double earth_radius = 6371e3;         // m
  double altitude = 600e3;              // m
  double carrier_frequency = 2e9;       // Hz
  double light_speed = 3e8;             // m/s
  double grav_parameter = 3.986e14;     // m^3/s^2
  double earth_rotation_rate = 7.27e-5; // rad/s
  double inclination = 0.925024503556995;  // 53 deg in rad

  // [cell]
  double cell_theta_c = 0.0078;  // rad
  double cell_mu_ups_min = 0.042;
  double cell_theta_v = 0.108;
  bool cell_explicit = false;  // explicit lat/lon instead of track-relative
  double cell_lat = 0.0;
  double cell_lon = 0.0;

  // [constellation]
  int planes = 1;
  int sats_per_plane = 1;
  double phase_offset = 0.0;

  // [sim]
  int samples = 100000;
  std::uint64_t seed = 42;
  double anchor_time = 1000.0;  // s
  int threads = 0;              // 0 = hardware count

  // [numerics]
  VMethod v_eval = VMethod::kQuadrature;
  int series_n_max = 2;
  double cdf_abs_tol = 1e-9;
  int gl_nodes = 64;
  RoundingMode rounding = RoundingMode::kFloor;

  // [doppler_cdf]
  std::vector<double> dc_theta_v = {0.098, 0.108, 0.118};
  std::vector<double> dc_altitudes = {600e3, 1200e3, 2000e3};
  int dc_s_points = 121;

  // [diff_cdf]
  std::vector<double> diff_theta_c = {0.0078, 0.0157, 0.0314};
  double diff_theta_v = 0.25;
  std::vector<double> diff_theta_v_sweep = {0.2, 0.3, 0.4, 0.5};
  double diff_mu_ups_min = 0.0;
  double diff_altitude = 2000e3;
  int diff_zeta_points = 121;

  // [max_diff]
  double md_parent_theta_c = 0.0071;
  double md_threshold = 950.0;
  int md_points = 220;

  // [plan]
  double plan_parent_theta_c = 0.0071;
  double plan_threshold = 950.0;

  // [output]
  std::string output_dir = "out";

  // [validate] budgets; defaults are the acceptance values
  double val_ks_budget = 0.02;
  double val_cap_cdf_budget = 0.005;
  double val_ups_min_budget = 0.03;
  double val_series_budget = 1e-5;
  double val_exact_vs_approx_budget = 0.08;
  double val_bound_slack = 1e-3;

  EvalPolicy eval_policy() const {
    return {v_eval, series_n_max, cdf_abs_tol, 0.99};
  }
};

// Parses the INI-style config file. Unknown sections or keys, malformed
// values, and unit mismatches raise ConfigError with the line number.
RunConfig parse_config_file(const std::string& path);
RunConfig parse_config_text(const std::string& text);

}  // namespace leodop
