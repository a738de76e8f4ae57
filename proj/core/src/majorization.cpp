#include "thermocat/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "thermocat/error.hpp"

namespace thermocat {
namespace {

constexpr double kCollinearTolerance = 1e-12;

bool same_ratio(double a, double b) {
  return std::abs(a - b) <= kCollinearTolerance * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

ThermoCurve thermo_curve(const ProbDist& p, const ProbDist& g) {
  if (p.dim() != g.dim()) fail(ErrorCode::DimensionMismatch, "curve arguments differ in dimension");
  if (!g.full_rank()) fail(ErrorCode::FullRankRequired, "reference has a zero weight");
  const std::size_t n = p.dim();
  std::vector<double> ratio(n);
  for (std::size_t i = 0; i < n; ++i) ratio[i] = p[i] / g[i];
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return ratio[a] > ratio[b]; });

  ThermoCurve c;
  c.breakpoints.push_back({0.0, 0.0});
  double x = 0.0;
  double y = 0.0;
  double last_ratio = -1.0;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t i = order[k];
    x += g[i];
    y += p[i];
    if (k > 0 && same_ratio(ratio[i], last_ratio)) {
      c.breakpoints.back() = {x, y};
    } else {
      c.breakpoints.push_back({x, y});
    }
    last_ratio = ratio[i];
  }
  c.breakpoints.back() = {1.0, 1.0};
  return c;
}

double eval(const ThermoCurve& c, double x) {
  const auto& b = c.breakpoints;
  if (x <= b.front().x) return b.front().y;
  if (x >= b.back().x) return b.back().y;
  const auto hi = std::upper_bound(b.begin(), b.end(), x, [](double v, const CurvePoint& pt) { return v < pt.x; });
  const auto lo = hi - 1;
  const double span = hi->x - lo->x;
  if (span <= 0.0) return hi->y;
  return lo->y + (hi->y - lo->y) * (x - lo->x) / span;
}

Verdict dominates(const ThermoCurve& c1, const ThermoCurve& c2, double tol) {
  std::vector<double> xs;
  for (const auto& pt : c1.breakpoints) xs.push_back(pt.x);
  for (const auto& pt : c2.breakpoints) xs.push_back(pt.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  Verdict v;
  double worst = std::numeric_limits<double>::infinity();
  for (double x : xs) {
    const double a = eval(c1, x);
    const double b = eval(c2, x);
    if (a - b < worst) {
      worst = a - b;
      v.curve_witness = CurveWitness{x, a, b};
    }
  }
  v.allowed = worst >= -tol;
  return v;
}

Verdict thermal_feasible(const ProbDist& p, const ProbDist& p_prime, const ProbDist& g) {
  return dominates(thermo_curve(p, g), thermo_curve(p_prime, g), kDominanceTolerance);
}

namespace {

bool ordered(ExtReal lhs, ExtReal rhs) {
  if (rhs.is_infinite()) return lhs.is_infinite();
  if (lhs.is_infinite()) return true;
  return lhs.value() >= rhs.value() - kDivergenceOrderTolerance;
}

}  // namespace

Verdict catalytic_relative_majorization(const ProbDist& p, const ProbDist& q, const ProbDist& p_prime,
                                        const ProbDist& q_prime, const std::vector<Alpha>& grid,
                                        Family family) {
  for (Alpha a : grid) {
    if (!(a.value() >= 0.5)) fail(ErrorCode::DomainError, "relative majorization grid needs alpha >= 1/2");
  }
  Verdict v;
  for (Alpha a : grid) {
    const bool forward = ordered(divergence(family, p, q, a), divergence(family, p_prime, q_prime, a));
    const bool backward = ordered(divergence(family, q, p, a), divergence(family, q_prime, p_prime, a));
    if (!(forward && backward)) {
      v.allowed = false;
      v.alpha_witness = a;
      break;
    }
  }
  return v;
}

Verdict catalytic_d_majorization(const ProbDist& p, const ProbDist& q, const ProbDist& p_prime,
                                 const ProbDist& q_prime, const std::vector<Alpha>& grid, Family family) {
  Verdict v;
  for (Alpha a : grid) {
    if (!ordered(divergence(family, p, q, a), divergence(family, p_prime, q_prime, a))) {
      v.allowed = false;
      v.alpha_witness = a;
      break;
    }
  }
  return v;
}

}  // namespace thermocat
