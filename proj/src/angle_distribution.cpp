#include "leodop/angle_distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "leodop/errors.hpp"
#include "leodop/numerics.hpp"

namespace leodop {

namespace {

constexpr double kPi = std::numbers::pi;
// Below this theta_v the branch formulas (which divide by sin theta_v)
// are bypassed in favor of the concentric case-1 closed form.
constexpr double kThetaVZero = 1e-9;

double clamp01(double p, EvalDiagnostics* diag) {
  if (p < 0.0 || p > 1.0) {
    const double excess = p < 0.0 ? -p : p - 1.0;
    if (diag && excess > 1e-9) {
      ++diag->clamp_warnings;
      diag->max_clamp = std::max(diag->max_clamp, excess);
    }
    return std::clamp(p, 0.0, 1.0);
  }
  return p;
}

// Normalized u argument: tiny negatives are round-off from
// theta_v - theta_min; true negatives are rejected (the lune formula has no
// meaning there and the paper does not define it).
double checked_u(double u, double v, double theta_c, double theta_v) {
  if (u >= 0.0) return u;
  if (u >= -1e-12) return 0.0;
  std::ostringstream os;
  os << "V kernel: negative lower limit u=" << u << " (v=" << v
     << ", theta_c=" << theta_c << ", theta_v=" << theta_v << ")";
  throw DomainError(os.str());
}

double v_eval(double u, double v, const CellGeometry& cell,
              const EvalPolicy& policy) {
  u = checked_u(u, v, cell.theta_c, cell.theta_v);
  if (policy.v_method == VMethod::kSeries && u > 0.0 && v > u) {
    const double z = (u / v) * (u / v);
    if (z <= policy.series_z_fallback)
      return v_kernel_series(u, v, policy.series_n_max);
  }
  const double norm = 2.0 * (1.0 - std::cos(cell.theta_c));
  const double tol = std::clamp(policy.cdf_abs_tol * norm, 1e-16, 1e-10);
  return v_kernel_quadrature(u, v, tol);
}

double vprime_eval(double u, double v, double du, double dv,
                   const CellGeometry& cell, const EvalPolicy& policy) {
  u = checked_u(u, v, cell.theta_c, cell.theta_v);
  if (policy.v_method == VMethod::kSeries && u > 0.0 && v > u) {
    const double z = (u / v) * (u / v);
    if (z <= policy.series_z_fallback)
      return v_kernel_derivative(u, v, du, dv, policy.series_n_max);
  }
  const double norm = 2.0 * (1.0 - std::cos(cell.theta_c));
  const double tol = std::clamp(policy.cdf_abs_tol * norm, 1e-16, 1e-10);
  return v_kernel_derivative_quadrature(u, v, du, dv, tol);
}

}  // namespace

CellGeometry make_cell(double theta_c, double theta_v, double mu_ups_min) {
  if (!(theta_c > 0.0 && theta_c < kPi / 2.0))
    throw DomainError("make_cell: theta_c outside (0, pi/2)");
  if (theta_v < 0.0) throw DomainError("make_cell: negative theta_v");
  if (mu_ups_min < 0.0) throw DomainError("make_cell: negative mu_ups_min");
  if (mu_ups_min > theta_v + 1e-12)
    throw DomainError("make_cell: mu_ups_min exceeds theta_v");
  return {theta_c, theta_v, std::min(mu_ups_min, theta_v)};
}

CaseInfo select_case(double gamma, double theta_c, double theta_v) {
  if (gamma < 0.0 || gamma > kPi)
    throw DomainError("select_case: gamma outside [0, pi]");
  const bool inside = theta_v < theta_c;
  if (gamma <= theta_c - theta_v) return {CaseTag::kCase1, inside};
  const double cg = std::cos(gamma);
  const double cv = std::cos(theta_v);
  const double cc = std::cos(theta_c);
  if (theta_c > theta_v && cg * cv >= cc) return {CaseTag::kCase2, inside};
  if (theta_v < gamma && gamma <= theta_c + theta_v && cg <= cc * cv)
    return {CaseTag::kCase3, inside};
  return {CaseTag::kCase4, inside};
}

double theta_min_branch(double gamma, double theta_c, double theta_v,
                        CaseTag tag) {
  if (theta_v <= kThetaVZero)
    throw DomainError("theta_min_branch: not applicable at theta_v = 0");
  const double cg = std::cos(gamma);
  const double cv = std::cos(theta_v);
  const double cc = std::cos(theta_c);
  const double sv = std::sin(theta_v);
  switch (tag) {
    case CaseTag::kCase2:
      // cot(tv) - cos(tc)/(cos(g) sin(tv)), factored to one cancellation
      return std::atan((cg * cv - cc) / (sv * cg));
    case CaseTag::kCase3:
      return std::atan((cc * cv - cg) / (sv * cc));
    case CaseTag::kCase4:
      return std::atan((cg - cc * cv) / (sv * cc));
    default:
      throw DomainError("theta_min_branch: not applicable for case 1");
  }
}

double theta_min_derivative(double gamma, double theta_c, double theta_v,
                            CaseTag tag) {
  if (theta_v <= kThetaVZero)
    throw DomainError("theta_min_derivative: not applicable at theta_v = 0");
  const double sg = std::sin(gamma);
  const double cg = std::cos(gamma);
  const double cv = std::cos(theta_v);
  const double cc = std::cos(theta_c);
  const double sv = std::sin(theta_v);
  switch (tag) {
    case CaseTag::kCase2: {
      const double g = (cg * cv - cc) / (sv * cg);
      const double gp = -cc * sg / (sv * cg * cg);
      return gp / (1.0 + g * g);
    }
    case CaseTag::kCase3: {
      const double g = (cc * cv - cg) / (sv * cc);
      const double gp = sg / (sv * cc);
      return gp / (1.0 + g * g);
    }
    case CaseTag::kCase4: {
      const double g = (cg - cc * cv) / (sv * cc);
      const double gp = -sg / (sv * cc);
      return gp / (1.0 + g * g);
    }
    default:
      throw DomainError("theta_min_derivative: not applicable for case 1");
  }
}

double v_kernel_quadrature(double u, double v, double abs_tol) {
  u = checked_u(u, v, 0.0, 0.0);
  if (v <= u) return 0.0;
  if (u == 0.0) return 1.0 - std::cos(v);
  if (v > kPi / 2.0)
    throw DomainError("v_kernel_quadrature: v above pi/2");
  // substitute phi = u + w^2; the sqrt edge at phi = u becomes smooth
  const double tu = std::tan(u);
  auto integrand = [&](double w) {
    const double phi = u + w * w;
    const double r = tu / std::tan(phi);
    const double x = 1.0 - r * r;
    return 2.0 * w * std::sin(phi) * reg_inc_beta_half(x);
  };
  return integrate_adaptive(integrand, 0.0, std::sqrt(v - u), abs_tol);
}

double v_kernel_series(double u, double v, int n_max) {
  if (n_max < 0) throw DomainError("v_kernel_series: n_max < 0");
  u = checked_u(u, v, 0.0, 0.0);
  if (v <= u) return 0.0;
  if (u == 0.0) return 1.0 - std::cos(v);  // log(u) singularity: closed form
  const double z = (u / v) * (u / v);
  const double u2 = u * u, u4 = u2 * u2, v2 = v * v;
  const double logs = 2.0 * (std::log(u) - std::log(v));
  double coeff = 1.0 / kPi;  // (1/2)_n / (n! pi), n = 0
  double sum = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    const double f32 = hyp3f2_one_one(n, z);
    const double bracket =
        -u4 * (n - 0.5) / (4.0 * v2) * f32 +
        0.5 * (v2 / (n + 0.5) +
               u2 * (-1.0 + std::numbers::egamma + logs + digamma_half(n)));
    sum += coeff * bracket;
    coeff *= (n + 0.5) / (n + 1.0);
  }
  return sum;
}

double v_kernel_derivative(double u, double v, double du_dgamma,
                           double dv_dgamma, int n_max) {
  if (n_max < 0) throw DomainError("v_kernel_derivative: n_max < 0");
  u = checked_u(u, v, 0.0, 0.0);
  if (v <= u) return 0.0;
  if (du_dgamma == 0.0 && dv_dgamma == 0.0) return 0.0;
  if (u == 0.0) {
    // limit of the series: the u^2 log(u) terms vanish
    return dv_dgamma * std::sin(v);
  }
  const double z = (u / v) * (u / v);
  const double u2 = u * u, u3 = u2 * u, u4 = u2 * u2;
  const double v2 = v * v, v3 = v2 * v;
  const double logs = 2.0 * (std::log(u) - std::log(v));
  const double zprime =
      2.0 * u * du_dgamma / v2 - 2.0 * u2 * dv_dgamma / v3;
  double coeff = 1.0 / kPi;
  double sum = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    const double f32 = hyp3f2_one_one(n, z);
    const double f32p = hyp3f2_one_one_dz(n, z);
    const double term =
        -(n - 0.5) * u4 / (4.0 * v2) * zprime * f32p +
        (n - 0.5) * f32 *
            (-u3 * du_dgamma / v2 + u4 * dv_dgamma / (2.0 * v3)) +
        u * du_dgamma *
            (logs + digamma_half(n) + std::numbers::egamma - 1.0) +
        v * dv_dgamma / (n + 0.5) +
        0.5 * u2 * (2.0 * du_dgamma / u - 2.0 * dv_dgamma / v);
    sum += coeff * term;
    coeff *= (n + 0.5) / (n + 1.0);
  }
  return sum;
}

double v_kernel_derivative_quadrature(double u, double v, double du_dgamma,
                                      double dv_dgamma, double abs_tol) {
  u = checked_u(u, v, 0.0, 0.0);
  if (v <= u) return 0.0;
  double result = 0.0;
  if (dv_dgamma != 0.0) {
    const double r = u == 0.0 ? 0.0 : std::tan(u) / std::tan(v);
    result += dv_dgamma * std::sin(v) * reg_inc_beta_half(1.0 - r * r);
  }
  if (du_dgamma != 0.0) {
    // dV/du = -(2 sec^2 u / pi) * int_u^v sin(phi) / (tan(phi) sqrt(x)) dphi
    // with the same phi = u + w^2 smoothing substitution.
    const double tu = std::tan(u);
    const double sec2 = 1.0 + tu * tu;
    auto integrand = [&](double w) {
      const double phi = u + w * w;
      const double tphi = std::tan(phi);
      const double r = tu / tphi;
      const double x = std::max(1.0 - r * r, 0.0);
      if (x <= 0.0) {
        // w = 0 limit: integrand -> 2 sin(u) sqrt(tan u / (2 sec^2 u))/tan u
        const double c = std::sqrt(2.0 * sec2 / std::max(tu, 1e-300));
        return 2.0 * std::sin(u) / (tu * c);
      }
      return 2.0 * w * std::sin(phi) / (tphi * std::sqrt(x));
    };
    const double kern =
        integrate_adaptive(integrand, 0.0, std::sqrt(v - u), abs_tol);
    result += du_dgamma * (-2.0 * sec2 / kPi) * kern;
  }
  return result;
}

namespace {

// Shared case dispatch: evaluates either the CDF or the PDF terms.
struct CaseEval {
  CaseTag tag;
  double theta_min;
};

CaseEval resolve_case(double gamma, const CellGeometry& cell) {
  const CaseInfo info = select_case(gamma, cell.theta_c, cell.theta_v);
  double tm = 0.0;
  if (info.tag != CaseTag::kCase1)
    tm = theta_min_branch(gamma, cell.theta_c, cell.theta_v, info.tag);
  return {info.tag, tm};
}

}  // namespace

double central_angle_cdf(double gamma, const CellGeometry& cell,
                         const EvalPolicy& policy, EvalDiagnostics* diag) {
  if (gamma < 0.0 || gamma > kPi)
    throw DomainError("central_angle_cdf: gamma outside [0, pi]");
  const double tc = cell.theta_c, tv = cell.theta_v;
  if (tv <= kThetaVZero) {
    if (gamma >= tc) return 1.0;
    return clamp01((1.0 - std::cos(gamma)) / (1.0 - std::cos(tc)), diag);
  }
  if (gamma <= std::max(0.0, tv - tc)) return 0.0;
  if (gamma >= tv + tc) return 1.0;

  const double norm = 1.0 - std::cos(tc);
  const auto [tag, tm] = resolve_case(gamma, cell);
  double f = 0.0;
  switch (tag) {
    case CaseTag::kCase1:
      f = (1.0 - std::cos(gamma)) / norm;
      break;
    case CaseTag::kCase2:
      f = (1.0 - std::cos(gamma)) / norm +
          (v_eval(tv + tm, tc, cell, policy) -
           v_eval(tm, gamma, cell, policy)) /
              (2.0 * norm);
      break;
    case CaseTag::kCase3:
      f = 1.0 + (v_eval(tv + tm, gamma, cell, policy) -
                 v_eval(tm, tc, cell, policy)) /
                    (2.0 * norm);
      break;
    case CaseTag::kCase4:
      f = (v_eval(tm, tc, cell, policy) +
           v_eval(tv - tm, gamma, cell, policy)) /
          (2.0 * norm);
      break;
  }
  return clamp01(f, diag);
}

double central_angle_pdf(double gamma, const CellGeometry& cell,
                         const EvalPolicy& policy) {
  if (gamma < 0.0 || gamma > kPi)
    throw DomainError("central_angle_pdf: gamma outside [0, pi]");
  const double tc = cell.theta_c, tv = cell.theta_v;
  if (tv <= kThetaVZero) {
    if (gamma >= tc) return 0.0;
    return std::sin(gamma) / (1.0 - std::cos(tc));
  }
  if (gamma <= std::max(0.0, tv - tc) || gamma >= tv + tc) return 0.0;

  const double norm = 1.0 - std::cos(tc);
  const auto [tag, tm] = resolve_case(gamma, cell);
  if (tag == CaseTag::kCase1) return std::sin(gamma) / norm;

  const double tmp = theta_min_derivative(gamma, tc, tv, tag);
  double f = 0.0;
  switch (tag) {
    case CaseTag::kCase2:
      f = std::sin(gamma) / norm +
          (vprime_eval(tv + tm, tc, tmp, 0.0, cell, policy) -
           vprime_eval(tm, gamma, tmp, 1.0, cell, policy)) /
              (2.0 * norm);
      break;
    case CaseTag::kCase3:
      f = (vprime_eval(tv + tm, gamma, tmp, 1.0, cell, policy) -
           vprime_eval(tm, tc, tmp, 0.0, cell, policy)) /
          (2.0 * norm);
      break;
    case CaseTag::kCase4:
      // u = theta_v - theta_min has du/dgamma = -theta_min'
      f = (vprime_eval(tm, tc, tmp, 0.0, cell, policy) +
           vprime_eval(tv - tm, gamma, -tmp, 1.0, cell, policy)) /
          (2.0 * norm);
      break;
    default:
      break;
  }
  return std::max(f, 0.0);
}

std::vector<double> case_boundary_knots(const CellGeometry& cell) {
  const double tc = cell.theta_c, tv = cell.theta_v;
  std::vector<double> knots;
  if (tv <= kThetaVZero) {
    knots = {0.0, tc};
    return knots;
  }
  const double lo = std::max(0.0, tv - tc);
  const double hi = tv + tc;
  knots.push_back(lo);
  if (tv < tc) {
    knots.push_back(tc - tv);  // case 1 -> 2
    knots.push_back(std::acos(std::min(1.0, std::cos(tc) / std::cos(tv))));
  }
  // case 4 <-> 3 switch
  const double g34 = std::acos(std::cos(tc) * std::cos(tv));
  if (g34 > lo && g34 < hi) knots.push_back(g34);
  knots.push_back(hi);
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end(),
                          [](double a, double b) { return b - a < 1e-14; }),
              knots.end());
  return knots;
}

double ups_min_cdf(double gamma_min, double theta_c, double mu_ups_min,
                   const EvalPolicy& policy) {
  if (mu_ups_min < 0.0) throw DomainError("ups_min_cdf: negative mu");
  const CellGeometry cell{theta_c, mu_ups_min, mu_ups_min};
  return central_angle_cdf(gamma_min, cell, policy);
}

double ups_min_pdf(double gamma_min, double theta_c, double mu_ups_min,
                   const EvalPolicy& policy) {
  if (mu_ups_min < 0.0) throw DomainError("ups_min_pdf: negative mu");
  const CellGeometry cell{theta_c, mu_ups_min, mu_ups_min};
  return central_angle_pdf(gamma_min, cell, policy);
}

}  // namespace leodop
