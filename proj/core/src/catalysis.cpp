#include "thermocat/catalysis.hpp"

#include <cmath>

#include "thermocat/divergences.hpp"
#include "thermocat/error.hpp"
#include "thermocat/free_energy.hpp"

namespace thermocat {
namespace {

void require_order(double alpha) {
  if (!std::isfinite(alpha) || alpha < 0.0) fail(ErrorCode::DomainError, "order must be finite and non-negative");
  if (alpha == 1.0) fail(ErrorCode::AlphaOne, "the shorthand A_alpha has a pole at alpha = 1");
}

}  // namespace

const char* to_string(ProfileKind k) { return k == ProfileKind::Distributed ? "distributed" : "concentrated"; }

CatalystProfile make_profile(const ProbDist& p_init, const ProbDist& q_final) {
  if (p_init.dim() != q_final.dim()) fail(ErrorCode::DimensionMismatch, "catalyst spectra differ in dimension");
  return CatalystProfile{p_init, q_final, p_init.dim(), total_variation(p_init, q_final)};
}

CatalystProfile profile_distributed(std::size_t d_M, double epsilon) {
  if (d_M == 0 || d_M % 2 != 0) fail(ErrorCode::OddDimension, "distributed profile needs an even dimension");
  if (!(epsilon >= 0.0)) fail(ErrorCode::DomainError, "epsilon must be non-negative");
  if (epsilon > 0.5) fail(ErrorCode::EpsilonTooLarge, "distributed profile needs epsilon <= 1/2");
  const double d = static_cast<double>(d_M);
  std::vector<double> p(d_M);
  for (std::size_t i = 0; i < d_M; ++i) p[i] = i < d_M / 2 ? 1.0 / d + 2.0 * epsilon / d : 1.0 / d - 2.0 * epsilon / d;
  return CatalystProfile{ProbDist::make(p), ProbDist::uniform(d_M), d_M, epsilon};
}

CatalystProfile profile_concentrated(std::size_t d_M, double epsilon) {
  if (d_M < 2) fail(ErrorCode::DomainError, "concentrated profile needs d >= 2");
  if (!(epsilon >= 0.0)) fail(ErrorCode::DomainError, "epsilon must be non-negative");
  const double d = static_cast<double>(d_M);
  if (epsilon > 1.0 / d) fail(ErrorCode::EpsilonTooLarge, "concentrated profile needs epsilon <= 1/d");
  std::vector<double> p(d_M, 1.0 / d);
  p[0] += epsilon;
  p[1] -= epsilon;
  return CatalystProfile{ProbDist::make(p), ProbDist::uniform(d_M), d_M, epsilon};
}

CatalystProfile make_profile(ProfileKind kind, std::size_t d_M, double epsilon) {
  return kind == ProfileKind::Distributed ? profile_distributed(d_M, epsilon) : profile_concentrated(d_M, epsilon);
}

double power_sum(const ProbDist& p, double alpha) {
  if (alpha == 0.0) return static_cast<double>(p.rank());
  double s = 0.0;
  for (double x : p) {
    if (x > 0.0) s += std::pow(x, alpha);
  }
  return s;
}

double exact_catalytic_delta(double delta_F_system, const ProbDist& sigma, const ProbDist& gamma_M, Alpha alpha) {
  if (!alpha.is_finite()) fail(ErrorCode::DomainError, "exact delta needs a finite order");
  if (!gamma_M.full_rank()) fail(ErrorCode::FullRankRequired, "catalyst Gibbs state has a zero weight");
  const ExtReal d = tsallis_divergence(sigma, gamma_M, alpha);
  if (d.is_infinite()) fail(ErrorCode::OverflowToInfinity, "catalyst divergence is infinite");
  return delta_F_system * (1.0 + alpha.sgn() * (alpha.value() - 1.0) * d.value());
}

double athermality_cap(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) fail(ErrorCode::DomainError, "cap is defined for 0 < alpha < 1");
  return 1.0 / (1.0 - alpha);
}

ApproxDeltaBreakdown approx_catalytic_delta(const ProbDist& p_sys, const ProbDist& p_sys_prime,
                                            const GibbsContext& ctx_S, const CatalystProfile& prof, double alpha) {
  require_order(alpha);
  const Alpha a = Alpha::finite(alpha);
  const ExtReal f_init = tsallis_free_energy(p_sys, ctx_S, a).value;
  const ExtReal f_final = tsallis_free_energy(p_sys_prime, ctx_S, a).value;
  if (f_init.is_infinite() || f_final.is_infinite()) {
    fail(ErrorCode::OverflowToInfinity, "system free energy is infinite");
  }
  ApproxDeltaBreakdown b{};
  b.P_alpha = power_sum(prof.p_init, alpha);
  b.Q_alpha = power_sum(prof.q_final, alpha);
  b.A_alpha = ctx_S.kBT() * (1.0 + (alpha - 1.0) * ctx_S.log_partition_fn()) / (alpha - 1.0);
  b.F_final = f_final.value();
  b.delta_system = f_final.value() - f_init.value();
  const double scale = std::pow(static_cast<double>(prof.d_M), alpha - 1.0);
  b.delta_total = scale * (b.P_alpha * b.delta_system + (b.Q_alpha - b.P_alpha) * (b.F_final + b.A_alpha));
  return b;
}

double direct_catalytic_delta(const ProbDist& p_sys, const ProbDist& p_sys_prime, const GibbsContext& ctx_S,
                              const CatalystProfile& prof, double alpha) {
  require_order(alpha);
  const Alpha a = Alpha::finite(alpha);
  const GibbsContext ctx_M = trivial_context(prof.d_M, ctx_S.beta());
  const auto joint = [&](const ProbDist& s, const ProbDist& m) {
    return compose_free_energy(tsallis_free_energy(s, ctx_S, a), tsallis_free_energy(m, ctx_M, a), ctx_S, ctx_M, a)
        .value.value();
  };
  return joint(p_sys_prime, prof.q_final) - joint(p_sys, prof.p_init);
}

double continuity_bound(double alpha, double epsilon, std::size_t d_M) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) fail(ErrorCode::DomainError, "continuity bound needs alpha > 0");
  if (alpha >= 1.0) return 2.0 * alpha * epsilon;
  return std::pow(static_cast<double>(d_M), 1.0 - alpha) * std::pow(2.0 * epsilon, alpha);
}

double eps_bound(double alpha, double P_alpha, double delta_F_system, double F_prime_plus_A, std::size_t d_M) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) fail(ErrorCode::DomainError, "epsilon bound needs alpha > 0");
  if (delta_F_system > 0.0) fail(ErrorCode::DomainError, "system free energy must not increase");
  if (F_prime_plus_A == 0.0) fail(ErrorCode::DomainError, "F' + A vanishes");
  const double slack = P_alpha * (-delta_F_system);
  if (alpha >= 1.0) return slack / (2.0 * alpha * std::abs(F_prime_plus_A));
  const double inner = slack / (std::pow(static_cast<double>(d_M), 1.0 - alpha) * std::abs(F_prime_plus_A));
  return 0.5 * std::pow(inner, 1.0 / alpha);
}

double gap_exact(const CatalystProfile& prof, double alpha) {
  return power_sum(prof.q_final, alpha) - power_sum(prof.p_init, alpha);
}

double gap_leading_order(ProfileKind kind, std::size_t d_M, double epsilon, double alpha) {
  const double d = static_cast<double>(d_M);
  const double e2 = epsilon * epsilon;
  if (kind == ProfileKind::Distributed) return -2.0 * alpha * (alpha - 1.0) * std::pow(d, 1.0 - alpha) * e2;
  return -alpha * (alpha - 1.0) * std::pow(d, 2.0 - alpha) * e2;
}

double leading_order_delta(ProfileKind kind, std::size_t d_M, double epsilon, double delta_F_system,
                           double F_system_initial_plus_A, double alpha) {
  const double e2 = epsilon * epsilon;
  const double c = alpha * (alpha - 1.0) * F_system_initial_plus_A * e2;
  if (kind == ProfileKind::Distributed) return delta_F_system - 2.0 * c;
  return delta_F_system - static_cast<double>(d_M) * c;
}

std::vector<SweepRow> catalysis_sweep(const std::vector<ProfileKind>& kinds, const std::vector<std::size_t>& dims,
                                      const std::vector<double>& epsilons, const std::vector<double>& alphas,
                                      const ProbDist& p_sys, const ProbDist& p_sys_prime, const GibbsContext& ctx_S) {
  std::vector<SweepRow> rows;
  for (ProfileKind kind : kinds) {
    for (std::size_t d : dims) {
      for (double eps : epsilons) {
        const CatalystProfile prof = make_profile(kind, d, eps);
        for (double a : alphas) {
          const ApproxDeltaBreakdown b = approx_catalytic_delta(p_sys, p_sys_prime, ctx_S, prof, a);
          rows.push_back(SweepRow{kind, d, eps, a, b.P_alpha, b.Q_alpha, b.Q_alpha - b.P_alpha,
                                  gap_leading_order(kind, d, eps, a), b.delta_total});
        }
      }
    }
  }
  return rows;
}

}  // namespace thermocat
