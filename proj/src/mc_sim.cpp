#include "leodop/mc_sim.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

#include "leodop/doppler.hpp"
#include "leodop/doppler_distribution.hpp"
#include "leodop/empirical_cdf.hpp"
#include "leodop/errors.hpp"
#include "leodop/numerics.hpp"
#include "leodop/rng.hpp"

namespace leodop {

namespace {
constexpr int kChunkSize = 8192;
}

CellGeometry ServingGeometry::cell_geometry() const {
  return make_cell(theta_c, theta_v, mu_ups_min);
}

PassModel fit_pass_model(const SatState& ecf_state) {
  const Vec3 p = normalized(ecf_state.position);
  const Vec3 n_raw = cross(ecf_state.position, ecf_state.velocity);
  if (norm(n_raw) < 1e-9)
    throw DomainError("fit_pass_model: degenerate satellite state");
  return {normalized(n_raw), p};
}

double ups_min_to_track(const SurfaceDirection& ue, const PassModel& pm) {
  const double s = std::clamp(dot(ue.vec(), pm.track_normal), -1.0, 1.0);
  return std::abs(std::asin(s));
}

std::optional<SatUeGeometry> serving_geometry(const SurfaceDirection& ue,
                                              const Vec3& sat_pos_ecf,
                                              const SystemConstants& sc) {
  const SurfaceDirection sub(sat_pos_ecf);
  const double ups = central_angle(ue, sub);
  if (ups > sc.phi_max) return std::nullopt;
  return SatUeGeometry{ups, elevation_from_ups(ups, sc),
                       slant_range(ups, sc)};
}

ServingGeometry select_serving(const SimScenario& scenario) {
  const SystemConstants& sc = scenario.constants;
  const double limit =
      common_visibility_angle(scenario.cell.theta_c, sc);
  ServingGeometry best;
  double best_angle = limit + 1.0;
  bool found = false;
  for (int p = 0; p < scenario.walker.num_planes; ++p) {
    for (int s = 0; s < scenario.walker.sats_per_plane; ++s) {
      const SatState st =
          sat_state_ecf(scenario.walker, sc, p, s, scenario.t_eval);
      const double ang =
          central_angle(scenario.cell.center, SurfaceDirection(st.position));
      if (ang <= limit && ang < best_angle) {
        best_angle = ang;
        best.plane = p;
        best.slot = s;
        best.pass = fit_pass_model(st);
        found = true;
      }
    }
  }
  if (!found)
    throw DomainError(
        "select_serving: no satellite inside the common visibility region");
  best.theta_v = best_angle;
  best.mu_ups_min = ups_min_to_track(scenario.cell.center, best.pass);
  best.theta_c = scenario.cell.theta_c;
  return best;
}

SimSamples simulate_doppler_samples(const SimScenario& scenario,
                                    int num_threads) {
  const SystemConstants& sc = scenario.constants;
  if (scenario.num_ues < 1)
    throw DomainError("simulate_doppler_samples: need at least one UE");

  SimSamples out;
  out.serving = select_serving(scenario);
  const PassModel& pass = out.serving.pass;
  const SurfaceDirection sub(pass.subpoint);
  out.common_doppler_hz =
      doppler_magnitude(out.serving.theta_v, out.serving.mu_ups_min, sc);

  const int n = scenario.num_ues;
  out.doppler_hz.resize(n);
  out.ups_min_rad.resize(n);
  out.diff_doppler_hz.resize(n);

  const int num_chunks = (n + kChunkSize - 1) / kChunkSize;
  auto run_chunk = [&](int chunk) {
    RngStream rng(scenario.seed, static_cast<std::uint64_t>(chunk));
    const int begin = chunk * kChunkSize;
    const int end = std::min(begin + kChunkSize, n);
    for (int i = begin; i < end; ++i) {
      const SurfaceDirection ue = sample_uniform_cap(scenario.cell, rng);
      const double ups_t = central_angle(ue, sub);
      const double ups_min = ups_min_to_track(ue, pass);
      const double dop = doppler_magnitude(ups_t, ups_min, sc);
      out.doppler_hz[i] = dop;
      out.ups_min_rad[i] = ups_min;
      out.diff_doppler_hz[i] = dop - out.common_doppler_hz;
    }
  };

  int workers = num_threads > 0
                    ? num_threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, num_chunks);
  if (workers == 1) {
    for (int c = 0; c < num_chunks; ++c) run_chunk(c);
  } else {
    std::vector<std::future<void>> futs;
    futs.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      futs.push_back(std::async(std::launch::async, [&, w] {
        for (int c = w; c < num_chunks; c += workers) run_chunk(c);
      }));
    }
    for (auto& f : futs) f.get();
  }
  return out;
}

double min_ups_rotating_scan(const SurfaceDirection& ue,
                             const WalkerStarConfig& cfg,
                             const SystemConstants& sc, int plane, int slot,
                             double t0, double t1, int steps) {
  if (steps < 3) throw DomainError("min_ups_rotating_scan: too few steps");
  auto angle_at = [&](double t) {
    const SatState st = sat_state_ecf(cfg, sc, plane, slot, t);
    return central_angle(ue, SurfaceDirection(st.position));
  };
  double best_t = t0, best = angle_at(t0);
  const double dt = (t1 - t0) / (steps - 1);
  for (int i = 1; i < steps; ++i) {
    const double t = t0 + i * dt;
    const double a = angle_at(t);
    if (a < best) {
      best = a;
      best_t = t;
    }
  }
  const auto [tm, neg] = golden_max(
      [&](double t) { return -angle_at(t); }, std::max(t0, best_t - dt),
      std::min(t1, best_t + dt), 1e-6);
  (void)tm;
  return -neg;
}

SphericalCap place_cell_track_relative(const WalkerStarConfig& cfg,
                                       const SystemConstants& sc, int plane,
                                       int slot, double t_anchor,
                                       double mu_offset, double theta_c) {
  const SatState st = sat_state_ecf(cfg, sc, plane, slot, t_anchor);
  const PassModel pm = fit_pass_model(st);
  const Vec3 center =
      pm.subpoint * std::cos(mu_offset) + pm.track_normal * std::sin(mu_offset);
  return make_cap(SurfaceDirection(center), theta_c);
}

double eval_time_for_theta_v(double mu, double theta_v_target,
                             const SystemConstants& sc) {
  if (theta_v_target < mu - 1e-12)
    throw DomainError("eval_time_for_theta_v: theta_v below mu");
  const double r =
      std::clamp(std::cos(theta_v_target) / std::cos(mu), -1.0, 1.0);
  return std::acos(r) / sc.omega_f;
}

FlatEarthReport validate_flat_earth_comparison(const SimScenario& scenario,
                                               const EvalPolicy& policy) {
  const SimSamples sim = simulate_doppler_samples(scenario);
  const EmpiricalCdf emp(sim.doppler_hz);
  const CellGeometry cell = sim.serving.cell_geometry();
  const SystemConstants& sc = scenario.constants;

  FlatEarthReport rep;
  const double lo = emp.sorted().front();
  const double hi = emp.sorted().back();
  const int kGrid = 256;
  for (int i = 0; i <= kGrid; ++i) {
    const double s = lo + (hi - lo) * i / kGrid;
    const double fe = emp(s);
    const double fa = doppler_cdf_approx(s, cell, sc, policy);
    const double fb = doppler_cdf_upper_bound(s, cell, sc, policy);
    rep.sup_emp_vs_approx = std::max(rep.sup_emp_vs_approx, std::abs(fe - fa));
    rep.sup_emp_vs_bound = std::max(rep.sup_emp_vs_bound, std::abs(fe - fb));
    rep.sup_approx_vs_bound =
        std::max(rep.sup_approx_vs_bound, std::abs(fa - fb));
    rep.bound_minus_emp_max = std::max(rep.bound_minus_emp_max, fb - fe);
  }
  return rep;
}

}  // namespace leodop
