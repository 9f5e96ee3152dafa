#include "leodop/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <queue>

#include "leodop/errors.hpp"

namespace leodop {

namespace {

// Kronrod-15 abscissae with embedded Gauss-7 weights (col 1) and
// Kronrod weights (col 2), positive half.
constexpr double kNodes[8] = {
    0.000000000000000, 0.405845151377397, 0.741531185599394,
    0.949107912342759, 0.207784955007898, 0.586087235467691,
    0.864864423359769, 0.991455371120813};
constexpr double kGauss[8] = {
    0.417959183673469, 0.381830050505119, 0.279705391489277,
    0.129484966168870, 0.0, 0.0, 0.0, 0.0};
constexpr double kKronrod[8] = {
    0.209482141084728, 0.190350578064785, 0.140653259715525,
    0.063092092629979, 0.204432940075298, 0.169004726639267,
    0.104790010322250, 0.022935322010529};

struct Panel {
  double a, b, value, error;
};

Panel eval_panel(const std::function<double(double)>& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double f0 = f(mid);
  double g7 = kGauss[0] * f0;
  double k15 = kKronrod[0] * f0;
  for (int i = 1; i < 8; ++i) {
    const double dx = half * kNodes[i];
    const double fi = f(mid + dx) + f(mid - dx);
    g7 += kGauss[i] * fi;
    k15 += kKronrod[i] * fi;
  }
  g7 *= half;
  k15 *= half;
  const double err = std::pow(200.0 * std::abs(g7 - k15), 1.5);
  return {a, b, k15, err};
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double abs_tol) {
  if (a == b) return 0.0;
  constexpr int kMaxPanels = 4000;

  auto worse = [](const Panel& x, const Panel& y) { return x.error < y.error; };
  std::priority_queue<Panel, std::vector<Panel>, decltype(worse)> q(worse);
  q.push(eval_panel(f, a, b));
  double total_err = q.top().error;

  int panels = 1;
  while (total_err > abs_tol && panels < kMaxPanels) {
    Panel p = q.top();
    q.pop();
    total_err -= p.error;
    const double mid = 0.5 * (p.a + p.b);
    if (mid <= p.a || mid >= p.b) {  // interval at machine resolution
      q.push(p);
      total_err += p.error;
      break;
    }
    Panel left = eval_panel(f, p.a, mid);
    Panel right = eval_panel(f, mid, p.b);
    q.push(left);
    q.push(right);
    total_err += left.error + right.error;
    ++panels;
  }

  double sum = 0.0;
  while (!q.empty()) {
    sum += q.top().value;
    q.pop();
  }
  return sum;
}

const GaussLegendre& gauss_legendre(int n) {
  if (n < 2) throw DomainError("gauss_legendre: need n >= 2");
  static std::map<int, GaussLegendre> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  GaussLegendre gl;
  gl.nodes.resize(n);
  gl.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Chebyshev initial guess, refined by Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    gl.nodes[i] = -x;
    gl.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    gl.weights[i] = w;
    gl.weights[n - 1 - i] = w;
  }
  return cache.emplace(n, std::move(gl)).first->second;
}

double reg_inc_beta_half(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return (2.0 / std::numbers::pi) * std::asin(std::sqrt(x));
}

double digamma_half(int n) {
  // psi(1/2) = -gamma - 2 ln 2; psi(n + 1/2) = psi(1/2) + 2 sum 1/(2k-1).
  double v = -std::numbers::egamma - 2.0 * std::numbers::ln2;
  for (int k = 1; k <= n; ++k) v += 2.0 / (2.0 * k - 1.0);
  return v;
}

double hyp3f2_one_one(int n, double z) {
  if (z == 0.0) return 1.0;
  if (z < 0.0 || z > 1.0)
    throw DomainError("hyp3f2_one_one: argument outside [0, 1]");
  const double a3 = 1.5 - n;
  double term = 1.0, sum = 1.0;
  for (int m = 0; m < 2000000; ++m) {
    term *= (1.0 + m) * (a3 + m) / ((2.0 + m) * (3.0 + m)) * z;
    sum += term;
    if (std::abs(term) <= 1e-16 * std::abs(sum)) return sum;
  }
  throw DomainError("hyp3f2_one_one: series did not converge");
}

double hyp3f2_one_one_dz(int n, double z) {
  if (z < 0.0 || z > 1.0)
    throw DomainError("hyp3f2_one_one_dz: argument outside [0, 1]");
  const double a3 = 1.5 - n;
  // d/dz sum c_m z^m = sum m c_m z^{m-1}
  double cm = 1.0, sum = 0.0, zp = 1.0;
  for (int m = 1; m < 2000000; ++m) {
    cm *= (1.0 * m) * (a3 + m - 1.0) / ((1.0 + m) * (2.0 + m));
    const double term = m * cm * zp;
    sum += term;
    if (m > 2 && std::abs(term) <= 1e-16 * std::abs(sum) + 1e-300) return sum;
    zp *= z;
  }
  throw DomainError("hyp3f2_one_one_dz: series did not converge");
}

double bisect_largest_feasible(const std::function<bool(double)>& feasible,
                               double lo, double hi, double tol) {
  if (!feasible(lo)) throw DomainError("bisect: lower bracket infeasible");
  if (feasible(hi)) return hi;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (feasible(mid) ? lo : hi) = mid;
  }
  return lo;
}

std::pair<double, double> golden_max(const std::function<double(double)>& f,
                                     double a, double b, double tol) {
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    }
  }
  const double xm = 0.5 * (a + b);
  return {xm, f(xm)};
}

}  // namespace leodop
