#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace thermocat {

inline constexpr double kIngestTolerance = 1e-9;
inline constexpr double kNormTolerance = 1e-12;

/// Validated finite probability vector. Weights are non-negative and sum to 1
/// within kNormTolerance; the object is immutable after construction.
class ProbDist {
 public:
  /// Clamps entries in [-tol, 0) to zero and renormalizes.
  /// Throws Error(NotADistribution) if an entry is below -tol or the sum is
  /// off by more than tol.
  static ProbDist make(std::span<const double> raw, double tol = kIngestTolerance);
  static ProbDist make(std::initializer_list<double> raw, double tol = kIngestTolerance);

  static ProbDist uniform(std::size_t n);
  /// Point mass on index k of an n-level system.
  static ProbDist delta(std::size_t n, std::size_t k);

  std::size_t dim() const { return w_.size(); }
  std::span<const double> weights() const { return w_; }
  double operator[](std::size_t i) const { return w_[i]; }
  auto begin() const { return w_.begin(); }
  auto end() const { return w_.end(); }

  std::size_t rank() const;
  bool full_rank() const { return rank() == dim(); }
  double min() const;
  double max() const;

  friend bool operator==(const ProbDist&, const ProbDist&) = default;

 private:
  explicit ProbDist(std::vector<double> w) : w_(std::move(w)) {}
  std::vector<double> w_;
};

inline ProbDist make_prob_dist(std::span<const double> raw, double tol = kIngestTolerance) {
  return ProbDist::make(raw, tol);
}

/// Kronecker product in (first, second) index order: result[i*dim(q)+j] = p[i]*q[j].
ProbDist tensor(const ProbDist& p, const ProbDist& q);

/// Total-variation distance: half the l1 norm of the difference.
double total_variation(const ProbDist& p, const ProbDist& q);

}  // namespace thermocat
