#pragma once

#include "thermocat/alpha.hpp"
#include "thermocat/ext_real.hpp"
#include "thermocat/prob_dist.hpp"

namespace thermocat {

/// Divergence value in nats; +infinity when the support condition fails.
using DivergenceResult = ExtReal;

enum class Family { Renyi, Tsallis };

const char* to_string(Family f);

// Deformed logarithm and exponential. Inverse pair on their common domain.
// The infinite tags use the pointwise limits in alpha.
double ln_alpha(double x, Alpha alpha);
double exp_alpha(double x, Alpha alpha);

// Entropies. For alpha < 0 (and -infinity) p must be full rank, otherwise
// Error(SupportError).
double renyi_entropy(const ProbDist& p, Alpha alpha);
double tsallis_entropy(const ProbDist& p, Alpha alpha);
double shannon_entropy(const ProbDist& p);

// Divergences D(p||q). Terms with p_i = 0 are dropped for alpha > 0.
// Returns +infinity when supp(p) is not contained in supp(q) at alpha >= 1
// (and at 0 < alpha < 1 when the supports are disjoint, Renyi only).
// Negative orders require both arguments full rank.
DivergenceResult renyi_divergence(const ProbDist& p, const ProbDist& q, Alpha alpha);
DivergenceResult tsallis_divergence(const ProbDist& p, const ProbDist& q, Alpha alpha);
DivergenceResult divergence(Family family, const ProbDist& p, const ProbDist& q, Alpha alpha);

/// Pseudo-additive composition: dpq + drs + sgn(alpha)(alpha-1) dpq drs.
/// Error(OverflowToInfinity) for infinite inputs, Error(DomainError) for an
/// infinite order.
DivergenceResult compose_tsallis(DivergenceResult dpq, DivergenceResult drs, Alpha alpha);

/// Maps a Renyi divergence value to the Tsallis value of the same order (and
/// back). Both maps are strictly increasing; defined for finite alpha != 1.
double tsallis_from_renyi(double renyi, Alpha alpha);
double renyi_from_tsallis(double tsallis, Alpha alpha);

}  // namespace thermocat
