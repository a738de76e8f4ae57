#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "thermocat/channels.hpp"
#include "thermocat/prob_dist.hpp"

namespace thermocat::testing {

inline constexpr std::uint64_t kSeed = 20240611;

using Rng = std::mt19937_64;

inline std::size_t random_dim(Rng& rng, std::size_t lo = 2, std::size_t hi = 16) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Full-rank distribution; entries bounded away from zero by the floor.
inline ProbDist random_dist(Rng& rng, std::size_t n, double floor = 1e-3) {
  std::exponential_distribution<double> ex(1.0);
  std::vector<double> w(n);
  double s = 0.0;
  for (double& x : w) {
    x = ex(rng) + floor;
    s += x;
  }
  for (double& x : w) x /= s;
  return ProbDist::make(w, kNormTolerance);
}

/// Distribution with exactly `zeros` zero entries at random positions.
inline ProbDist random_dist_with_zeros(Rng& rng, std::size_t n, std::size_t zeros) {
  const ProbDist base = random_dist(rng, n);
  std::vector<double> w(base.begin(), base.end());
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::shuffle(idx.begin(), idx.end(), rng);
  for (std::size_t k = 0; k < zeros; ++k) w[idx[k]] = 0.0;
  double s = 0.0;
  for (double x : w) s += x;
  for (double& x : w) x /= s;
  return ProbDist::make(w, kNormTolerance);
}

inline std::vector<double> sorted_desc(const ProbDist& p) {
  std::vector<double> w(p.begin(), p.end());
  std::sort(w.begin(), w.end(), std::greater<>());
  return w;
}

/// Random column-stochastic matrix with strictly positive entries.
inline StochasticMatrix random_channel(Rng& rng, std::size_t rows, std::size_t cols) {
  std::vector<double> e(rows * cols);
  for (std::size_t c = 0; c < cols; ++c) {
    const ProbDist col = random_dist(rng, rows, 1e-6);
    for (std::size_t r = 0; r < rows; ++r) e[r * cols + c] = col[r];
  }
  return StochasticMatrix::make(rows, cols, std::move(e));
}

}  // namespace thermocat::testing
