#include "thermocat/free_energy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "thermocat/error.hpp"

namespace thermocat {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_matching(const ProbDist& p, const GibbsContext& ctx) {
  if (p.dim() != ctx.dim()) {
    fail(ErrorCode::DimensionMismatch, "state has " + std::to_string(p.dim()) + " levels, context has " +
                                           std::to_string(ctx.dim()));
  }
}

// Difference of two extended reals; NaN when both are +infinity.
double difference(ExtReal a, ExtReal b) { return a.value() - b.value(); }

// D^R(p_in||g) - D^R(p_out||g) at each non-negative grid order.
std::vector<double> renyi_gaps(const ProbDist& p_in, const ProbDist& p_out, const GibbsContext& ctx,
                               const std::vector<Alpha>& grid) {
  require_matching(p_in, ctx);
  require_matching(p_out, ctx);
  const ProbDist g = gibbs_dist(ctx);
  std::vector<double> gaps;
  for (Alpha a : grid) {
    if (a.value() < 0.0) continue;
    gaps.push_back(difference(renyi_divergence(p_in, g, a), renyi_divergence(p_out, g, a)));
  }
  return gaps;
}

}  // namespace

FreeEnergy free_energy(Family family, const ProbDist& p, const GibbsContext& ctx, Alpha alpha) {
  require_matching(p, ctx);
  const ExtReal d = divergence(family, p, gibbs_dist(ctx), alpha);
  if (d.is_infinite()) return {ExtReal::infinity()};
  return {ctx.kBT() * d.value() - ctx.kBT() * ctx.log_partition_fn()};
}

FreeEnergy renyi_free_energy(const ProbDist& p, const GibbsContext& ctx, Alpha alpha) {
  return free_energy(Family::Renyi, p, ctx, alpha);
}

FreeEnergy tsallis_free_energy(const ProbDist& p, const GibbsContext& ctx, Alpha alpha) {
  return free_energy(Family::Tsallis, p, ctx, alpha);
}

FreeEnergy compose_free_energy(FreeEnergy f_s, FreeEnergy f_m, const GibbsContext& ctx_s,
                               const GibbsContext& ctx_m, Alpha alpha) {
  if (!alpha.is_finite()) fail(ErrorCode::DomainError, "composition needs a finite order");
  if (f_s.value.is_infinite() || f_m.value.is_infinite()) {
    fail(ErrorCode::OverflowToInfinity, "cannot compose an infinite free energy");
  }
  if (ctx_s.beta() != ctx_m.beta()) fail(ErrorCode::DomainError, "contexts must share beta");
  const double kbt = ctx_s.kBT();
  const double s = f_s.value.value();
  const double m = f_m.value.value();
  // The brackets are kBT times the divergence parts of each free energy.
  const double cross = alpha.sgn() * (alpha.value() - 1.0) / kbt * (s + kbt * ctx_s.log_partition_fn()) *
                       (m + kbt * ctx_m.log_partition_fn());
  return {s + m + cross};
}

ScanReport second_law_scan(const ProbDist& p, const ProbDist& p_prime, const GibbsContext& ctx,
                           const std::vector<Alpha>& grid, double tol) {
  require_matching(p, ctx);
  require_matching(p_prime, ctx);
  if (grid.empty()) fail(ErrorCode::DomainError, "empty alpha grid");
  const ProbDist g = gibbs_dist(ctx);
  ScanReport r;
  r.grid = grid;
  r.kBT = ctx.kBT();
  for (Alpha a : grid) {
    const double dr = difference(renyi_divergence(p_prime, g, a), renyi_divergence(p, g, a));
    const double dt = difference(tsallis_divergence(p_prime, g, a), tsallis_divergence(p, g, a));
    r.deltas_renyi_nats.push_back(dr);
    r.deltas_tsallis_nats.push_back(dt);
    r.deltas_renyi.push_back(r.kBT * dr);
    r.deltas_tsallis.push_back(r.kBT * dt);
    const double fr = r.kBT * dr;
    const double ft = r.kBT * dt;
    if (std::isfinite(fr) && fr > tol) {
      r.allowed_renyi = false;
      if (!r.first_violation) r.first_violation = Violation{a, Family::Renyi, fr};
    }
    if (std::isfinite(ft) && ft > tol) {
      r.allowed_tsallis = false;
      if (!r.first_violation) r.first_violation = Violation{a, Family::Tsallis, ft};
    }
  }
  r.allowed = r.allowed_renyi && r.allowed_tsallis;
  return r;
}

double work_distance(const ProbDist& p, const ProbDist& p_prime, const GibbsContext& ctx,
                     const std::vector<Alpha>& grid) {
  const auto gaps = renyi_gaps(p, p_prime, ctx, grid);
  if (gaps.empty()) fail(ErrorCode::DomainError, "grid has no non-negative order");
  double best = kInf;
  for (double x : gaps) {
    if (std::isnan(x)) continue;
    best = std::min(best, x);
  }
  return best == -kInf ? -kInf : ctx.kBT() * best;
}

bool work_bit_feasible(const ProbDist& p_in, const ProbDist& p_out, const GibbsContext& ctx,
                       WorkBitSpec wb, const std::vector<Alpha>& grid) {
  const double threshold = ctx.beta() * wb.delta_E;
  const auto gaps = renyi_gaps(p_in, p_out, ctx, grid);
  return std::all_of(gaps.begin(), gaps.end(), [&](double x) { return !(x < threshold); });
}

WorkValue work_extract(const ProbDist& p_in, const ProbDist& p_out, const GibbsContext& ctx,
                       const std::vector<Alpha>& grid) {
  const auto gaps = renyi_gaps(p_in, p_out, ctx, grid);
  if (gaps.empty()) fail(ErrorCode::DomainError, "grid has no non-negative order");
  double best = kInf;
  for (double x : gaps) {
    if (!std::isnan(x)) best = std::min(best, x);
  }
  return {best, best * ctx.kBT()};
}

WorkValue work_cost(const ProbDist& p_in, const ProbDist& p_out, const GibbsContext& ctx,
                    const std::vector<Alpha>& grid) {
  const auto gaps = renyi_gaps(p_out, p_in, ctx, grid);
  if (gaps.empty()) fail(ErrorCode::DomainError, "grid has no non-negative order");
  double best = -kInf;
  for (double x : gaps) {
    if (!std::isnan(x)) best = std::max(best, x);
  }
  return {best, best * ctx.kBT()};
}

}  // namespace thermocat
