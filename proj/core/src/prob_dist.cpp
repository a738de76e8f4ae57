#include "thermocat/prob_dist.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "thermocat/error.hpp"

namespace thermocat {

ProbDist ProbDist::make(std::span<const double> raw, double tol) {
  if (raw.empty()) fail(ErrorCode::NotADistribution, "empty weight vector");
  std::vector<double> w(raw.begin(), raw.end());
  double sum = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!std::isfinite(w[i]) || w[i] < -tol) {
      fail(ErrorCode::NotADistribution, "weight " + std::to_string(i) + " = " + std::to_string(w[i]));
    }
    if (w[i] < 0.0) w[i] = 0.0;
    sum += w[i];
  }
  if (!(std::abs(sum - 1.0) <= tol)) {
    fail(ErrorCode::NotADistribution, "weights sum to " + std::to_string(sum));
  }
  if (sum != 1.0) {
    for (double& x : w) x /= sum;
  }
  return ProbDist(std::move(w));
}

ProbDist ProbDist::make(std::initializer_list<double> raw, double tol) {
  return make(std::span<const double>(raw.begin(), raw.size()), tol);
}

ProbDist ProbDist::uniform(std::size_t n) {
  if (n == 0) fail(ErrorCode::NotADistribution, "uniform distribution of dimension 0");
  return ProbDist(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

ProbDist ProbDist::delta(std::size_t n, std::size_t k) {
  if (k >= n) fail(ErrorCode::NotADistribution, "point mass index out of range");
  std::vector<double> w(n, 0.0);
  w[k] = 1.0;
  return ProbDist(std::move(w));
}

std::size_t ProbDist::rank() const {
  return static_cast<std::size_t>(std::count_if(w_.begin(), w_.end(), [](double x) { return x > 0.0; }));
}

double ProbDist::min() const { return *std::min_element(w_.begin(), w_.end()); }
double ProbDist::max() const { return *std::max_element(w_.begin(), w_.end()); }

ProbDist tensor(const ProbDist& p, const ProbDist& q) {
  std::vector<double> out;
  out.reserve(p.dim() * q.dim());
  for (double a : p) {
    for (double b : q) out.push_back(a * b);
  }
  return ProbDist::make(out, kNormTolerance);
}

double total_variation(const ProbDist& p, const ProbDist& q) {
  if (p.dim() != q.dim()) fail(ErrorCode::DimensionMismatch, "total_variation");
  double l1 = 0.0;
  for (std::size_t i = 0; i < p.dim(); ++i) l1 += std::abs(p[i] - q[i]);
  return 0.5 * l1;
}

}  // namespace thermocat
