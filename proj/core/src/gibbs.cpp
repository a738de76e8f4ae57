#include "thermocat/gibbs.hpp"

#include <algorithm>
#include <cmath>

#include "thermocat/error.hpp"

namespace thermocat {

GibbsContext::GibbsContext(std::vector<double> energies, double beta)
    : energies_(std::move(energies)), beta_(beta), partition_fn_(0.0) {
  if (energies_.empty()) fail(ErrorCode::DomainError, "Gibbs context needs at least one level");
  if (!(beta_ > 0.0) || !std::isfinite(beta_)) fail(ErrorCode::DomainError, "beta must be positive and finite");
  for (double e : energies_) {
    if (!std::isfinite(e)) fail(ErrorCode::DomainError, "energy levels must be finite");
    partition_fn_ += std::exp(-beta_ * e);
  }
  if (!(partition_fn_ > 0.0) || !std::isfinite(partition_fn_)) {
    fail(ErrorCode::DomainError, "partition function is not a positive finite number");
  }
}

double GibbsContext::log_partition_fn() const { return std::log(partition_fn_); }

GibbsContext GibbsContext::compose(const GibbsContext& other) const {
  if (beta_ != other.beta_) fail(ErrorCode::DomainError, "composed contexts must share beta");
  std::vector<double> joint;
  joint.reserve(dim() * other.dim());
  for (double a : energies_) {
    for (double b : other.energies_) joint.push_back(a + b);
  }
  return GibbsContext(std::move(joint), beta_);
}

ProbDist gibbs_dist(const GibbsContext& ctx) {
  // Shifting by the ground energy keeps the exponentials in range and makes
  // the weights independent of a uniform energy offset.
  const auto e = ctx.energies();
  const double ground = *std::min_element(e.begin(), e.end());
  std::vector<double> w(e.size());
  double z = 0.0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    w[i] = std::exp(-ctx.beta() * (e[i] - ground));
    z += w[i];
  }
  for (double& x : w) x /= z;
  if (std::any_of(w.begin(), w.end(), [](double x) { return !(x > 0.0); })) {
    fail(ErrorCode::FullRankRequired, "Gibbs weights underflow to zero; lower beta or compress the spectrum");
  }
  return ProbDist::make(w, kNormTolerance);
}

GibbsContext trivial_context(std::size_t n, double beta) {
  return GibbsContext(std::vector<double>(n, 0.0), beta);
}

}  // namespace thermocat
