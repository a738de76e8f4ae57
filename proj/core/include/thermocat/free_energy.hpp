#pragma once

#include <optional>
#include <vector>

#include "thermocat/alpha.hpp"
#include "thermocat/divergences.hpp"
#include "thermocat/ext_real.hpp"
#include "thermocat/gibbs.hpp"
#include "thermocat/prob_dist.hpp"

namespace thermocat {

/// Generalized free energy in energy units (k_B = 1).
struct FreeEnergy {
  ExtReal value;
};

inline constexpr double kScanTolerance = 1e-10;

struct Violation {
  Alpha alpha;
  Family family;
  double delta;  // energy units
};

/// Per-order free-energy changes F(p') - F(p) for both families. The *_nats
/// columns hold the raw divergence differences D(p'||g) - D(p||g).
struct ScanReport {
  std::vector<Alpha> grid;
  std::vector<double> deltas_renyi;
  std::vector<double> deltas_tsallis;
  std::vector<double> deltas_renyi_nats;
  std::vector<double> deltas_tsallis_nats;
  bool allowed_renyi = true;
  bool allowed_tsallis = true;
  bool allowed = true;
  std::optional<Violation> first_violation;
  double kBT = 1.0;
};

/// Amount of work carried by a two-level battery; positive for extraction.
struct WorkBitSpec {
  double delta_E;
};

/// kBT D(p||g) - kBT ln Z in the given family.
FreeEnergy free_energy(Family family, const ProbDist& p, const GibbsContext& ctx, Alpha alpha);
FreeEnergy renyi_free_energy(const ProbDist& p, const GibbsContext& ctx, Alpha alpha);
FreeEnergy tsallis_free_energy(const ProbDist& p, const GibbsContext& ctx, Alpha alpha);

/// Free energy of a product state from its parts, with the cross term of the
/// non-additive family. Finite inputs and a finite order only.
FreeEnergy compose_free_energy(FreeEnergy f_s, FreeEnergy f_m, const GibbsContext& ctx_s,
                               const GibbsContext& ctx_m, Alpha alpha);

/// Evaluates every order in the grid. Entries that are not finite are
/// reported but do not enter the verdict.
ScanReport second_law_scan(const ProbDist& p, const ProbDist& p_prime, const GibbsContext& ctx,
                           const std::vector<Alpha>& grid, double tol = kScanTolerance);

/// kBT * inf over the non-negative grid orders of D^R(p||g) - D^R(p'||g).
double work_distance(const ProbDist& p, const ProbDist& p_prime, const GibbsContext& ctx,
                     const std::vector<Alpha>& grid);

/// True iff D^R(p_in||g) - D^R(p_out||g) >= beta * delta_E at every grid order.
bool work_bit_feasible(const ProbDist& p_in, const ProbDist& p_out, const GibbsContext& ctx,
                       WorkBitSpec wb, const std::vector<Alpha>& grid);

struct WorkValue {
  double nats;
  double energy;  // nats * kBT
};

/// inf over the grid of D^R(in||g) - D^R(out||g).
WorkValue work_extract(const ProbDist& p_in, const ProbDist& p_out, const GibbsContext& ctx,
                       const std::vector<Alpha>& grid);
/// sup over the grid of D^R(out||g) - D^R(in||g).
WorkValue work_cost(const ProbDist& p_in, const ProbDist& p_out, const GibbsContext& ctx,
                    const std::vector<Alpha>& grid);

}  // namespace thermocat
