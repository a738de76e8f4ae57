#include "thermocat/correlated.hpp"

#include <algorithm>
#include <cmath>

#include "thermocat/divergences.hpp"
#include "thermocat/error.hpp"
#include "thermocat/io.hpp"

namespace thermocat {
namespace {

constexpr int kLambdaScanPoints = 101;
constexpr double kMiTolerance = 1e-12;

double bits(double nats) { return nats / std::log(2.0); }

ProbDist pops_dist(const JointQubitState& s) { return ProbDist::make(std::span<const double>(s.pops)); }

JointQubitState product(double p_s, double p_m) {
  return JointQubitState{{p_s * p_m, p_s * (1.0 - p_m), (1.0 - p_s) * p_m, (1.0 - p_s) * (1.0 - p_m)}, 0.0};
}

}  // namespace

void validate(const ScenarioParams& params) {
  if (!(params.E_e > params.E_g)) fail(ErrorCode::DomainError, "excited energy must exceed ground energy");
  for (double b : {params.beta1, params.beta2, params.beta3, params.beta_b}) {
    if (!(b > 0.0) || !std::isfinite(b)) fail(ErrorCode::DomainError, "inverse temperatures must be positive");
  }
}

double ground_occupation(const ScenarioParams& params, double beta) {
  return 1.0 / (1.0 + std::exp(-beta * (params.E_e - params.E_g)));
}

JointQubitState build_initial_uc(const ScenarioParams& params) {
  validate(params);
  return product(ground_occupation(params, params.beta2), ground_occupation(params, params.beta1));
}

std::pair<double, double> chi_interval(const ScenarioParams& params) {
  validate(params);
  const double p1 = ground_occupation(params, params.beta1);
  const double p3 = ground_occupation(params, params.beta3);
  return {-(1.0 - p3) * (1.0 - p1), std::min(p3 * (1.0 - p1), (1.0 - p3) * p1)};
}

JointQubitState build_cc(const ScenarioParams& params, double chi) {
  const auto [lo, hi] = chi_interval(params);
  if (!(chi >= lo && chi <= hi)) {
    fail(ErrorCode::ChiOutOfRange,
         "chi = " + format_number(chi) + " outside [" + format_number(lo) + ", " + format_number(hi) + "]");
  }
  JointQubitState s = product(ground_occupation(params, params.beta3), ground_occupation(params, params.beta1));
  s.pops[0] += chi;
  s.pops[1] -= chi;
  s.pops[2] -= chi;
  s.pops[3] += chi;
  for (double& x : s.pops) x = std::max(x, 0.0);
  return s;
}

double lambda_max(const ScenarioParams& params) {
  const JointQubitState s = build_cc(params, 0.0);
  return std::sqrt(s.pops[1] * s.pops[2]);
}

JointQubitState build_qc(const ScenarioParams& params, double lambda) {
  JointQubitState s = build_cc(params, 0.0);
  // Relative slack so that lambda_max itself is accepted after rounding.
  if (!std::isfinite(lambda) || lambda * lambda > s.pops[1] * s.pops[2] * (1.0 + 1e-12)) {
    fail(ErrorCode::LambdaOutOfRange, "lambda = " + format_number(lambda) + " exceeds " +
                                          format_number(std::sqrt(s.pops[1] * s.pops[2])));
  }
  s.coherence = lambda;
  return s;
}

ProbDist block_spectrum(const JointQubitState& state) {
  const double a = state.pops[1];
  const double b = state.pops[2];
  const double lam = state.coherence;
  const double larger = 0.5 * (a + b) + std::hypot(0.5 * (a - b), lam);
  // Product of the eigenvalues is the block determinant; this avoids the
  // cancellation in mean - radius.
  const double smaller = larger > 0.0 ? std::max(0.0, (a * b - lam * lam) / larger) : 0.0;
  std::array<double, 4> ev = state.pops;
  if (a >= b) {
    ev[1] = larger;
    ev[2] = smaller;
  } else {
    ev[1] = smaller;
    ev[2] = larger;
  }
  return ProbDist::make(std::span<const double>(ev));
}

std::pair<ProbDist, ProbDist> marginals(const JointQubitState& state) {
  const auto& p = state.pops;
  return {ProbDist::make({p[0] + p[1], p[2] + p[3]}), ProbDist::make({p[0] + p[2], p[1] + p[3]})};
}

MIReport mutual_information(const JointQubitState& state) {
  const auto [s, m] = marginals(state);
  MIReport r{};
  r.h_s = bits(shannon_entropy(s));
  r.h_m = bits(shannon_entropy(m));
  r.h_joint = bits(shannon_entropy(block_spectrum(state)));
  r.mutual_info = r.h_s + r.h_m - r.h_joint;
  return r;
}

GibbsContext joint_context(const ScenarioParams& params) {
  validate(params);
  const GibbsContext qubit({params.E_g, params.E_e}, params.beta_b);
  return qubit.compose(qubit);
}

Verdict joint_verdict(const ScenarioParams& params, const JointQubitState& final_state) {
  const ProbDist g = gibbs_dist(joint_context(params));
  return thermal_feasible(pops_dist(build_initial_uc(params)), block_spectrum(final_state), g);
}

double solve_lambda_for_mi(const ScenarioParams& params, double target_mi_bits) {
  const double top = lambda_max(params);
  const auto mi = [&](double lam) { return mutual_information(build_qc(params, lam)).mutual_info; };
  std::vector<double> grid(kLambdaScanPoints);
  std::vector<double> values(kLambdaScanPoints);
  for (int k = 0; k < kLambdaScanPoints; ++k) {
    grid[k] = k == kLambdaScanPoints - 1 ? top : top * k / (kLambdaScanPoints - 1);
    values[k] = mi(grid[k]);
  }
  const double best = *std::max_element(values.begin(), values.end());
  if (!(target_mi_bits >= 0.0) || target_mi_bits > best) {
    fail(ErrorCode::TargetUnreachable, "target " + format_number(target_mi_bits) + " bits outside [0, " +
                                           format_number(best) + "]");
  }
  if (target_mi_bits <= values[0] + kMiTolerance) return 0.0;
  // First grid cell that brackets the target; bisect inside it.
  int k = 1;
  while (values[k] < target_mi_bits) ++k;
  double lo = grid[k - 1];
  double hi = grid[k];
  double mid = hi;
  for (int it = 0; it < 200; ++it) {
    mid = 0.5 * (lo + hi);
    const double v = mi(mid);
    if (std::abs(v - target_mi_bits) <= kMiTolerance || hi - lo < 1e-15) break;
    (v < target_mi_bits ? lo : hi) = mid;
  }
  return mid;
}

ScenarioReport scenario_report(const ScenarioParams& params, const std::vector<double>& chis,
                               const std::vector<double>& lambdas) {
  ScenarioReport r{params,
                   "Gibbs weights exp(-beta E); populations ground-first in (gg, ge, eg, ee) order with the "
                   "system index first; mutual information in bits; the degenerate middle block is "
                   "diagonalized before thermo-majorization",
                   build_initial_uc(params),
                   {},
                   gibbs_dist(joint_context(params)),
                   {},
                   {},
                   {}};
  r.initial_mi = mutual_information(r.initial);
  r.reference_curve = thermo_curve(r.gibbs, r.gibbs);
  r.initial_curve = thermo_curve(pops_dist(r.initial), r.gibbs);

  const auto add = [&](const std::string& family, double value, const JointQubitState& s) {
    const std::string label = family == "cc" ? "chi" : "lambda";
    ProbDist spectrum = block_spectrum(s);
    auto [ms, mm] = marginals(s);
    ThermoCurve curve = thermo_curve(spectrum, r.gibbs);
    r.states.push_back(ScenarioState{family + "(" + label + "=" + format_short(value) + ")", family, value, s,
                                     spectrum, ms, mm, mutual_information(s), joint_verdict(params, s),
                                     std::move(curve)});
  };
  for (double chi : chis) add("cc", chi, build_cc(params, chi));
  for (double lam : lambdas) add("qc", lam, build_qc(params, lam));
  return r;
}

}  // namespace thermocat
