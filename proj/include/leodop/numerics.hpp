#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace leodop {

// Adaptive Gauss-Kronrod (G7/K15) integration to an absolute tolerance.
// Splits the worst interval until the summed error estimate is below tol.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double abs_tol);

// Gauss-Legendre nodes and weights on [-1, 1]. Results are cached per n.
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussLegendre& gauss_legendre(int n);

// Regularized incomplete beta I_x(1/2, 1/2) = (2/pi) asin(sqrt(x)).
double reg_inc_beta_half(double x);

// Digamma at half-integer argument: psi(n + 1/2), n >= 0.
double digamma_half(int n);

// 3F2(1, 1, 3/2 - n; 2, 3; z) by direct power-series summation, and its
// derivative with respect to z. Term-ratio stopping at 1e-16 relative.
double hyp3f2_one_one(int n, double z);
double hyp3f2_one_one_dz(int n, double z);

// Largest x in [lo, hi] with feasible(x) true, assuming feasibility is
// monotone (true below some threshold). Preconditions: feasible(lo),
// !feasible(hi). Bisects until the bracket is narrower than tol and
// returns the feasible end.
double bisect_largest_feasible(const std::function<bool(double)>& feasible,
                               double lo, double hi, double tol);

// Maximum of a unimodal function on [a, b] by golden-section search.
// Returns {argmax, max}.
std::pair<double, double> golden_max(const std::function<double(double)>& f,
                                     double a, double b, double tol);

}  // namespace leodop
