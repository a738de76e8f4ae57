#include "thermocat/channels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "thermocat/error.hpp"

namespace thermocat {
namespace {

constexpr double kColumnTolerance = 1e-12;
constexpr double kRationalTolerance = 1e-9;

}  // namespace

StochasticMatrix StochasticMatrix::make(std::size_t rows, std::size_t cols, std::vector<double> entries) {
  if (rows == 0 || cols == 0 || entries.size() != rows * cols) {
    fail(ErrorCode::DimensionMismatch, "matrix shape does not match its entries");
  }
  for (std::size_t c = 0; c < cols; ++c) {
    double sum = 0.0;
    for (std::size_t r = 0; r < rows; ++r) {
      double& x = entries[r * cols + c];
      if (!std::isfinite(x) || x < -kColumnTolerance) {
        fail(ErrorCode::DomainError, "negative or non-finite matrix entry");
      }
      x = std::max(x, 0.0);
      sum += x;
    }
    if (std::abs(sum - 1.0) > kColumnTolerance) {
      fail(ErrorCode::DomainError, "column " + std::to_string(c) + " sums to " + std::to_string(sum));
    }
  }
  return StochasticMatrix(rows, cols, std::move(entries));
}

StochasticMatrix StochasticMatrix::identity(std::size_t n) {
  std::vector<double> e(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1.0;
  return StochasticMatrix(n, n, std::move(e));
}

ProbDist apply_channel(const StochasticMatrix& ch, const ProbDist& p) {
  if (ch.cols() != p.dim()) fail(ErrorCode::DimensionMismatch, "channel input size differs from state");
  std::vector<double> out(ch.rows(), 0.0);
  for (std::size_t r = 0; r < ch.rows(); ++r) {
    for (std::size_t c = 0; c < ch.cols(); ++c) out[r] += ch.at(r, c) * p[c];
  }
  return ProbDist::make(out, kNormTolerance);
}

RationalDist as_rational(const ProbDist& q, std::int64_t denominator) {
  if (denominator <= 0) fail(ErrorCode::NotRational, "denominator must be positive");
  RationalDist r{{}, denominator};
  std::int64_t total = 0;
  for (double x : q) {
    const double scaled = x * static_cast<double>(denominator);
    const double rounded = std::round(scaled);
    if (std::abs(scaled - rounded) > kRationalTolerance) {
      fail(ErrorCode::NotRational, "weight " + std::to_string(x) + " is not a multiple of 1/" +
                                       std::to_string(denominator));
    }
    r.numerators.push_back(static_cast<std::int64_t>(rounded));
    total += r.numerators.back();
  }
  if (total != denominator) fail(ErrorCode::NotRational, "numerators do not add up to the denominator");
  return r;
}

ProbDist embed(const ProbDist& p, const RationalDist& q) {
  if (p.dim() != q.numerators.size()) fail(ErrorCode::DimensionMismatch, "embedding arguments differ in dimension");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(q.denominator));
  for (std::size_t i = 0; i < p.dim(); ++i) {
    const std::int64_t d = q.numerators[i];
    if (d < 0) fail(ErrorCode::NotRational, "negative numerator");
    if (d == 0) {
      if (p[i] > 0.0) fail(ErrorCode::SupportError, "state has weight where the reference has none");
      continue;
    }
    out.insert(out.end(), static_cast<std::size_t>(d), p[i] / static_cast<double>(d));
  }
  if (out.size() != static_cast<std::size_t>(q.denominator)) {
    fail(ErrorCode::NotRational, "numerators do not add up to the denominator");
  }
  return ProbDist::make(out, kNormTolerance);
}

Rationalized rationalize(const ProbDist& p, std::int64_t M) {
  if (M <= 0) fail(ErrorCode::InvalidM, "M must be a positive integer");
  const std::size_t n = p.dim();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (p[i] < p[i + 1]) fail(ErrorCode::NotSorted, "weights must be non-increasing");
  }
  const std::size_t m = p.rank();
  const double dm = static_cast<double>(M);

  std::vector<std::int64_t> num(n, 0);
  std::int64_t used = 0;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    num[i] = static_cast<std::int64_t>(std::ceil(dm * p[i] - kRationalTolerance));
    used += num[i];
  }
  num[m - 1] = M - used;
  if (num[m - 1] <= 0) fail(ErrorCode::DegenerateRemainder, "remainder is not positive; choose a larger M");

  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<double>(num[i]) / dm;

  // Only column m-1 moves weight: it keeps b'_m / b_m and sends the surplus
  // needed by the rounded-up entries.
  std::vector<double> e(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1.0;
  const std::size_t last = m - 1;
  const double b_last = p[last];
  for (std::size_t j = 0; j < last; ++j) e[j * n + last] = std::max(0.0, (w[j] - p[j]) / b_last);
  e[last * n + last] = w[last] / b_last;
  double col = 0.0;
  for (std::size_t j = 0; j <= last; ++j) col += e[j * n + last];
  e[last * n + last] += 1.0 - col;  // absorb rounding so the column is exactly stochastic

  ProbDist pp = ProbDist::make(w, kNormTolerance);
  const double dist = total_variation(p, pp);
  return Rationalized{std::move(pp), std::move(num), M, StochasticMatrix::make(n, n, std::move(e)), dist, m};
}

Rationalized rationalize_unsorted(const ProbDist& p, std::int64_t M) {
  const std::size_t n = p.dim();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return p[a] > p[b]; });
  std::vector<double> sorted(n);
  for (std::size_t k = 0; k < n; ++k) sorted[k] = p[order[k]];

  const Rationalized s = rationalize(ProbDist::make(sorted, kNormTolerance), M);

  std::vector<double> w(n);
  std::vector<std::int64_t> num(n);
  std::vector<double> e(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    w[order[r]] = s.p_prime[r];
    num[order[r]] = s.numerators[r];
    for (std::size_t c = 0; c < n; ++c) e[order[r] * n + order[c]] = s.channel.at(r, c);
  }
  return Rationalized{ProbDist::make(w, kNormTolerance), std::move(num), M,
                      StochasticMatrix::make(n, n, std::move(e)), s.distance, s.support};
}

Perturbed perturb_full_rank(const ProbDist& p_prime, const std::vector<double>& schedule) {
  const std::size_t n = p_prime.dim();
  const std::size_t m = p_prime.rank();
  for (std::size_t i = 0; i < m; ++i) {
    if (p_prime[i] == 0.0) fail(ErrorCode::NotSorted, "zero weights must trail the nonzero ones");
  }
  const std::size_t z = n - m;
  if (schedule.size() != z) {
    fail(ErrorCode::ScheduleViolation,
         "schedule has " + std::to_string(schedule.size()) + " steps for " + std::to_string(z) + " zeros");
  }
  if (z == 0) return Perturbed{p_prime, 0.0, 0.0};

  double smallest = p_prime[0];
  for (std::size_t i = 0; i < m; ++i) smallest = std::min(smallest, p_prime[i]);
  const double dm = static_cast<double>(m);
  if (!(schedule[0] > 0.0) || smallest < (1.0 + 1.0 / dm) * schedule[0]) {
    fail(ErrorCode::ScheduleViolation, "first step is too large for the smallest nonzero weight");
  }
  for (std::size_t k = 1; k < z; ++k) {
    const double denom = dm + static_cast<double>(k);  // m + k - 1 with 1-based k
    if (!(schedule[k] > 0.0) || schedule[k - 1] < (1.0 + 1.0 / denom) * schedule[k]) {
      fail(ErrorCode::ScheduleViolation, "step " + std::to_string(k + 1) + " breaks the nesting condition");
    }
  }

  // share[k] = f_k / (m + k - 1): what step k takes from each earlier level.
  std::vector<double> share(z);
  for (std::size_t k = 0; k < z; ++k) share[k] = schedule[k] / (dm + static_cast<double>(k));

  std::vector<double> q(n);
  const double from_support = std::accumulate(share.begin(), share.end(), 0.0);
  for (std::size_t i = 0; i < m; ++i) q[i] = p_prime[i] - from_support;
  for (std::size_t i = 0; i < z; ++i) {
    double taken = 0.0;
    for (std::size_t k = i + 1; k < z; ++k) taken += share[k];
    q[m + i] = schedule[i] - taken;
  }
  if (std::any_of(q.begin(), q.end(), [](double x) { return !(x > 0.0); })) {
    fail(ErrorCode::ScheduleViolation, "schedule leaves a non-positive weight");
  }
  ProbDist out = ProbDist::make(q, kNormTolerance);
  const double dist = total_variation(p_prime, out);
  return Perturbed{std::move(out), dist, std::accumulate(schedule.begin(), schedule.end(), 0.0)};
}

}  // namespace thermocat
