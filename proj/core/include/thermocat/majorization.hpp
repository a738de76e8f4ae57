#pragma once

#include <optional>
#include <vector>

#include "thermocat/alpha.hpp"
#include "thermocat/divergences.hpp"
#include "thermocat/prob_dist.hpp"

namespace thermocat {

inline constexpr double kDominanceTolerance = 1e-9;
inline constexpr double kDivergenceOrderTolerance = 1e-10;

struct CurvePoint {
  double x;
  double y;
};

/// Concave piecewise-linear curve from (0,0) to (1,1). Collinear segments
/// are merged, so p == g yields exactly two points.
struct ThermoCurve {
  std::vector<CurvePoint> breakpoints;
};

struct CurveWitness {
  double x;
  double y_init;
  double y_final;
};

struct Verdict {
  bool allowed = true;
  /// For curve tests: the point of smallest margin (always filled).
  std::optional<CurveWitness> curve_witness;
  /// For divergence tests: the first order at which the condition fails.
  std::optional<Alpha> alpha_witness;
};

/// Sorts levels by p_i/g_i descending (ties by index) and accumulates.
/// Error(FullRankRequired) if g has a zero entry.
ThermoCurve thermo_curve(const ProbDist& p, const ProbDist& g);

/// Linear interpolation of the curve at x in [0,1].
double eval(const ThermoCurve& c, double x);

/// c1 lies on or above c2 (within tol) on the union of their breakpoints.
Verdict dominates(const ThermoCurve& c1, const ThermoCurve& c2, double tol = kDominanceTolerance);

/// p -> p' by a Gibbs-preserving map with fixed point g.
Verdict thermal_feasible(const ProbDist& p, const ProbDist& p_prime, const ProbDist& g);

/// Both orderings D(p||q) >= D(p'||q') and D(q||p) >= D(q'||p') at every grid
/// order; the grid must satisfy alpha >= 1/2 (Error(DomainError) otherwise).
/// The two pairs may live in different dimensions.
Verdict catalytic_relative_majorization(const ProbDist& p, const ProbDist& q, const ProbDist& p_prime,
                                        const ProbDist& q_prime, const std::vector<Alpha>& grid,
                                        Family family = Family::Tsallis);

/// Single ordering D(p||q) >= D(p'||q') at every grid order (any sign).
Verdict catalytic_d_majorization(const ProbDist& p, const ProbDist& q, const ProbDist& p_prime,
                                 const ProbDist& q_prime, const std::vector<Alpha>& grid,
                                 Family family = Family::Tsallis);

}  // namespace thermocat
