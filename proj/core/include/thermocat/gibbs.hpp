#pragma once

#include <span>
#include <vector>

#include "thermocat/prob_dist.hpp"

namespace thermocat {

/// Thermal reference for a Hamiltonian with the given energy levels at
/// inverse temperature beta. Units have k_B = 1, so kBT = 1/beta.
class GibbsContext {
 public:
  GibbsContext(std::vector<double> energies, double beta);

  std::span<const double> energies() const { return energies_; }
  std::size_t dim() const { return energies_.size(); }
  double beta() const { return beta_; }
  double kBT() const { return 1.0 / beta_; }
  double partition_fn() const { return partition_fn_; }
  double log_partition_fn() const;

  /// Context of the non-interacting composite H_A + H_B (energies E_i + E_j in
  /// (this, other) index order). Both contexts must share beta.
  GibbsContext compose(const GibbsContext& other) const;

 private:
  std::vector<double> energies_;
  double beta_;
  double partition_fn_;
};

/// weights[i] = exp(-beta E_i) / Z.
ProbDist gibbs_dist(const GibbsContext& ctx);

/// Uniform-energy-zero context of dimension n (trivial Hamiltonian).
GibbsContext trivial_context(std::size_t n, double beta);

}  // namespace thermocat
