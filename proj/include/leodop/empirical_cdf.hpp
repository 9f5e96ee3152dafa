#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace leodop {

// Right-continuous step CDF of a sample.
class EmpiricalCdf {
 public:
  explicit EmpiricalCdf(std::vector<double> samples);

  double operator()(double x) const;
  double quantile(double q) const;  // q in [0, 1]
  std::size_t size() const { return sorted_.size(); }
  const std::vector<double>& sorted() const { return sorted_; }

 private:
  std::vector<double> sorted_;
};

// One-sample Kolmogorov-Smirnov statistic against an analytical CDF:
// the sup of |F_emp - F| over the sample points, taking both one-sided
// step discrepancies into account.
double ks_distance(const EmpiricalCdf& emp,
                   const std::function<double(double)>& cdf);

}  // namespace leodop
