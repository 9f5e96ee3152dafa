#include "leodop/empirical_cdf.hpp"

#include <algorithm>
#include <cmath>

#include "leodop/errors.hpp"

namespace leodop {

EmpiricalCdf::EmpiricalCdf(std::vector<double> samples)
    : sorted_(std::move(samples)) {
  if (sorted_.empty()) throw DomainError("EmpiricalCdf: empty sample");
  std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::operator()(double x) const {
  const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(it - sorted_.begin()) / sorted_.size();
}

double EmpiricalCdf::quantile(double q) const {
  if (q < 0.0 || q > 1.0) throw DomainError("EmpiricalCdf: q outside [0, 1]");
  if (q <= 0.0) return sorted_.front();
  const auto idx = static_cast<std::size_t>(
      std::min<double>(std::ceil(q * sorted_.size()) - 1.0,
                       static_cast<double>(sorted_.size() - 1)));
  return sorted_[std::max<std::size_t>(idx, 0)];
}

double ks_distance(const EmpiricalCdf& emp,
                   const std::function<double(double)>& cdf) {
  const auto& xs = emp.sorted();
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = cdf(xs[i]);
    d = std::max(d, std::abs(f - (i + 1.0) / n));
    d = std::max(d, std::abs(f - i / n));
  }
  return d;
}

}  // namespace leodop
