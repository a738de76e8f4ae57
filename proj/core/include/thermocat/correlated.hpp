#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "thermocat/gibbs.hpp"
#include "thermocat/majorization.hpp"
#include "thermocat/prob_dist.hpp"

namespace thermocat {

/// Two identical qubits (system S, catalyst M) with levels E_g < E_e.
/// S starts thermal at beta2 and ends thermal at beta3; M is thermal at beta1;
/// the bath sits at beta_b.
struct ScenarioParams {
  double E_g = 0.0;
  double E_e = 2.0;
  double beta1 = 0.1;
  double beta2 = 0.2;
  double beta3 = 1.0;
  double beta_b = 2.0;
};

void validate(const ScenarioParams& params);

/// Ground-level occupation 1 / (1 + exp(-beta (E_e - E_g))).
double ground_occupation(const ScenarioParams& params, double beta);

/// Populations in (gg, ge, eg, ee) order, system index first, plus the
/// coherence between the two energy-degenerate middle levels.
struct JointQubitState {
  std::array<double, 4> pops;
  double coherence = 0.0;
};

JointQubitState build_initial_uc(const ScenarioParams& params);

/// Closed interval of admissible chi; the endpoints give a zero population.
std::pair<double, double> chi_interval(const ScenarioParams& params);
JointQubitState build_cc(const ScenarioParams& params, double chi);

/// Largest admissible |lambda| for the discordant family.
double lambda_max(const ScenarioParams& params);
JointQubitState build_qc(const ScenarioParams& params, double lambda);

/// Eigenvalues with the middle block diagonalized: the larger block
/// eigenvalue takes the slot whose diagonal entry is larger.
ProbDist block_spectrum(const JointQubitState& state);

/// (system marginal, catalyst marginal), each ground-first.
std::pair<ProbDist, ProbDist> marginals(const JointQubitState& state);

struct MIReport {
  double h_s;
  double h_m;
  double h_joint;
  double mutual_info;  // bits
};

MIReport mutual_information(const JointQubitState& state);

/// Joint Gibbs state of H_S + H_M at beta_b.
GibbsContext joint_context(const ScenarioParams& params);

/// Thermo-majorization of the initial product state against the
/// block-diagonalized final state.
Verdict joint_verdict(const ScenarioParams& params, const JointQubitState& final_state);

/// lambda in [0, lambda_max] with MI(build_qc(lambda)) = target to 1e-9 bits.
/// Error(TargetUnreachable) outside [0, MI(lambda_max)].
double solve_lambda_for_mi(const ScenarioParams& params, double target_mi_bits);

struct ScenarioState {
  std::string name;
  std::string family;  // "cc" or "qc"
  double parameter;    // chi or lambda
  JointQubitState state;
  ProbDist spectrum;
  ProbDist marginal_s;
  ProbDist marginal_m;
  MIReport mi;
  Verdict verdict;
  ThermoCurve curve;
};

struct ScenarioReport {
  ScenarioParams params;
  std::string convention;
  JointQubitState initial;
  MIReport initial_mi;
  ProbDist gibbs;
  ThermoCurve reference_curve;
  ThermoCurve initial_curve;
  std::vector<ScenarioState> states;
};

ScenarioReport scenario_report(const ScenarioParams& params, const std::vector<double>& chis,
                               const std::vector<double>& lambdas);

}  // namespace thermocat
