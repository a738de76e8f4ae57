#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "thermocat/alpha.hpp"
#include "thermocat/gibbs.hpp"
#include "thermocat/prob_dist.hpp"

namespace thermocat {

/// Catalyst spectrum before (p_init) and after (q_final) an approximate
/// return, with epsilon their total-variation distance.
struct CatalystProfile {
  ProbDist p_init;
  ProbDist q_final;
  std::size_t d_M;
  double epsilon;
};

CatalystProfile make_profile(const ProbDist& p_init, const ProbDist& q_final);

enum class ProfileKind { Distributed, Concentrated };

const char* to_string(ProfileKind k);

/// Returned catalyst uniform; initial spectrum shifted by +-2 eps/d on the two
/// halves. Error(OddDimension) for odd d, Error(EpsilonTooLarge) for eps > 1/2.
CatalystProfile profile_distributed(std::size_t d_M, double epsilon);
/// Returned catalyst uniform; initial spectrum (1/d+eps, 1/d-eps, 1/d, ...).
/// Error(EpsilonTooLarge) for eps > 1/d.
CatalystProfile profile_concentrated(std::size_t d_M, double epsilon);
CatalystProfile make_profile(ProfileKind kind, std::size_t d_M, double epsilon);

/// sum_i p_i^alpha over the support (the rank at alpha = 0).
double power_sum(const ProbDist& p, double alpha);

/// delta_F_system * [1 + sgn(alpha)(alpha-1) D(sigma||gamma_M)] for finite alpha.
double exact_catalytic_delta(double delta_F_system, const ProbDist& sigma, const ProbDist& gamma_M, Alpha alpha);

/// 1/(1-alpha) for 0 < alpha < 1.
double athermality_cap(double alpha);

struct ApproxDeltaBreakdown {
  double P_alpha;
  double Q_alpha;
  double A_alpha;
  double F_final;       // non-additive free energy of the final system state
  double delta_system;  // F(p_sys') - F(p_sys)
  double delta_total;
};

/// Joint free-energy change when the catalyst (trivial Hamiltonian, uniform
/// Gibbs state) goes from prof.p_init to prof.q_final. alpha >= 0 and != 1:
/// Error(AlphaOne) at one, Error(DomainError) for negative or infinite orders.
ApproxDeltaBreakdown approx_catalytic_delta(const ProbDist& p_sys, const ProbDist& p_sys_prime,
                                            const GibbsContext& ctx_S, const CatalystProfile& prof, double alpha);

/// Same quantity from composed free energies of system and catalyst.
double direct_catalytic_delta(const ProbDist& p_sys, const ProbDist& p_sys_prime, const GibbsContext& ctx_S,
                              const CatalystProfile& prof, double alpha);

/// Bound on |Q_alpha - P_alpha| for spectra at distance eps: 2 alpha eps for
/// alpha >= 1, d^(1-alpha) (2 eps)^alpha for 0 < alpha < 1.
double continuity_bound(double alpha, double epsilon, std::size_t d_M);

/// Sufficient return error that keeps the total change non-positive.
/// Error(DomainError) if delta_F_system > 0 or F_prime_plus_A == 0.
double eps_bound(double alpha, double P_alpha, double delta_F_system, double F_prime_plus_A, std::size_t d_M);

/// Q_alpha - P_alpha by direct summation.
double gap_exact(const CatalystProfile& prof, double alpha);
/// -2 alpha(alpha-1) d^(1-alpha) eps^2 (distributed) or
/// -alpha(alpha-1) d^(2-alpha) eps^2 (concentrated).
double gap_leading_order(ProfileKind kind, std::size_t d_M, double epsilon, double alpha);

/// Second-order expansion of the total change in eps.
double leading_order_delta(ProfileKind kind, std::size_t d_M, double epsilon, double delta_F_system,
                           double F_system_initial_plus_A, double alpha);

struct SweepRow {
  ProfileKind kind;
  std::size_t d_M;
  double epsilon;
  double alpha;
  double P_alpha;
  double Q_alpha;
  double gap_exact;
  double gap_leading;
  double delta_total;
};

/// Rows in (kind, d, eps, alpha) nesting order.
std::vector<SweepRow> catalysis_sweep(const std::vector<ProfileKind>& kinds, const std::vector<std::size_t>& dims,
                                      const std::vector<double>& epsilons, const std::vector<double>& alphas,
                                      const ProbDist& p_sys, const ProbDist& p_sys_prime, const GibbsContext& ctx_S);

}  // namespace thermocat
