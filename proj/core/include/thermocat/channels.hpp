#pragma once

#include <cstdint>
#include <vector>

#include "thermocat/prob_dist.hpp"

namespace thermocat {

/// Column-stochastic matrix, stored row-major with rows = output levels.
class StochasticMatrix {
 public:
  /// Validates non-negativity and unit column sums within 1e-12.
  static StochasticMatrix make(std::size_t rows, std::size_t cols, std::vector<double> entries);
  static StochasticMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
  const std::vector<double>& entries() const { return e_; }

 private:
  StochasticMatrix(std::size_t r, std::size_t c, std::vector<double> e) : rows_(r), cols_(c), e_(std::move(e)) {}
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> e_;
};

ProbDist apply_channel(const StochasticMatrix& ch, const ProbDist& p);

/// Distribution with weights numerators[i] / denominator.
struct RationalDist {
  std::vector<std::int64_t> numerators;
  std::int64_t denominator;
};

/// Reads q as integers over N; Error(NotRational) if some q_i N is not an
/// integer within 1e-9.
RationalDist as_rational(const ProbDist& q, std::int64_t denominator);

/// Fine-grained N-level image of p: level i is split into d_i copies of
/// p_i / d_i. Error(SupportError) if p_i > 0 where d_i = 0.
ProbDist embed(const ProbDist& p, const RationalDist& q);

struct Rationalized {
  ProbDist p_prime;
  std::vector<std::int64_t> numerators;  // p_prime[i] * M
  std::int64_t M;
  StochasticMatrix channel;  // maps p to p_prime
  double distance;           // total variation between p and p_prime
  std::size_t support;       // number of nonzero entries of p
};

/// Rounds the leading nonzero entries up to multiples of 1/M and lets the
/// last nonzero entry absorb the remainder. p must be non-increasing
/// (Error(NotSorted)); Error(InvalidM) for M <= 0; Error(DegenerateRemainder)
/// if the absorbing entry would become non-positive.
Rationalized rationalize(const ProbDist& p, std::int64_t M);

/// Same for arbitrary order: sorts, rationalizes and maps the result and the
/// channel back to the original labelling.
Rationalized rationalize_unsorted(const ProbDist& p, std::int64_t M);

struct Perturbed {
  ProbDist q;
  double distance;      // total variation between p_prime and q
  double schedule_sum;  // sum of the schedule steps
};

/// Fills the z trailing zeros of p_prime with the nested steps f_1 > f_2 > ...
/// taken from the nonzero part. Requires one step per zero, strictly
/// positive steps, b'_m >= (1 + 1/m) f_1 and f_{k-1} >= (1 + 1/(m+k-1)) f_k,
/// else Error(ScheduleViolation). Zeros must trail the nonzero entries
/// (Error(NotSorted)).
Perturbed perturb_full_rank(const ProbDist& p_prime, const std::vector<double>& schedule);

}  // namespace thermocat
