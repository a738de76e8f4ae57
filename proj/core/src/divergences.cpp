#include "thermocat/divergences.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "thermocat/error.hpp"

namespace thermocat {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Above this |alpha| power sums are accumulated in the log domain.
constexpr double kLogDomainAlpha = 30.0;

void require_same_dim(const ProbDist& p, const ProbDist& q) {
  if (p.dim() != q.dim()) {
    fail(ErrorCode::DimensionMismatch,
         "dimensions " + std::to_string(p.dim()) + " and " + std::to_string(q.dim()));
  }
}

void require_full_rank(const ProbDist& p, const char* what) {
  if (!p.full_rank()) fail(ErrorCode::SupportError, std::string(what) + " needs strictly positive weights");
}

double log_sum_exp(const std::vector<double>& terms) {
  if (terms.empty()) return -kInf;
  const double top = *std::max_element(terms.begin(), terms.end());
  if (!std::isfinite(top)) return top;
  double acc = 0.0;
  for (double t : terms) acc += std::exp(t - top);
  return top + std::log(acc);
}

// ln sum_i p_i^a, over the support of p. a is finite and not 0 or 1.
double log_power_sum(const ProbDist& p, double a) {
  if (std::abs(a) > kLogDomainAlpha) {
    std::vector<double> terms;
    for (double x : p) {
      if (x > 0.0) terms.push_back(a * std::log(x));
    }
    return log_sum_exp(terms);
  }
  double s = 0.0;
  for (double x : p) {
    if (x > 0.0) s += std::pow(x, a);
  }
  return std::log(s);
}

// ln sum_i p_i^a q_i^(1-a). Returns +inf when a > 1 and supp(p) escapes
// supp(q); -inf when 0 < a < 1 and the supports are disjoint.
double log_power_sum(const ProbDist& p, const ProbDist& q, double a) {
  std::vector<double> terms;
  terms.reserve(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (p[i] == 0.0) continue;
    if (q[i] == 0.0) {
      if (a > 1.0) return kInf;
      continue;
    }
    terms.push_back(a * std::log(p[i]) + (1.0 - a) * std::log(q[i]));
  }
  if (std::abs(a) > kLogDomainAlpha) return log_sum_exp(terms);
  double s = 0.0;
  for (double t : terms) s += std::exp(t);
  return std::log(s);
}

}  // namespace

const char* to_string(Family f) { return f == Family::Renyi ? "renyi" : "tsallis"; }

double ln_alpha(double x, Alpha alpha) {
  if (!(x > 0.0)) fail(ErrorCode::DomainError, "ln_alpha needs x > 0");
  switch (alpha.tag()) {
    case Alpha::Tag::One: return std::log(x);
    case Alpha::Tag::Zero: return x - 1.0;
    case Alpha::Tag::PosInfinity: return x >= 1.0 ? 0.0 : -kInf;
    case Alpha::Tag::NegInfinity: return x <= 1.0 ? 0.0 : kInf;
    case Alpha::Tag::Finite: break;
  }
  const double k = 1.0 - alpha.value();
  return std::expm1(k * std::log(x)) / k;
}

double exp_alpha(double x, Alpha alpha) {
  switch (alpha.tag()) {
    case Alpha::Tag::One: return std::exp(x);
    case Alpha::Tag::PosInfinity:
      if (x > 0.0) fail(ErrorCode::DomainError, "exp_alpha base is negative");
      return 1.0;
    case Alpha::Tag::NegInfinity:
      if (x < 0.0) fail(ErrorCode::DomainError, "exp_alpha base is negative");
      return 1.0;
    case Alpha::Tag::Zero:
    case Alpha::Tag::Finite: break;
  }
  const double k = 1.0 - alpha.value();
  const double base = 1.0 + k * x;
  if (base < 0.0) fail(ErrorCode::DomainError, "exp_alpha base is negative");
  if (base == 0.0) return k > 0.0 ? 0.0 : kInf;
  return std::exp(std::log1p(k * x) / k);
}

double shannon_entropy(const ProbDist& p) {
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) h -= x * std::log(x);
  }
  return h;
}

double renyi_entropy(const ProbDist& p, Alpha alpha) {
  switch (alpha.tag()) {
    case Alpha::Tag::Zero: return std::log(static_cast<double>(p.rank()));
    case Alpha::Tag::One: return shannon_entropy(p);
    case Alpha::Tag::PosInfinity: return -std::log(p.max());
    case Alpha::Tag::NegInfinity:
      require_full_rank(p, "entropy of order -infinity");
      return std::log(p.min());
    case Alpha::Tag::Finite: break;
  }
  const double a = alpha.value();
  if (a < 0.0) require_full_rank(p, "entropy of negative order");
  return alpha.sgn() / (1.0 - a) * log_power_sum(p, a);
}

double tsallis_entropy(const ProbDist& p, Alpha alpha) {
  switch (alpha.tag()) {
    case Alpha::Tag::Zero: return static_cast<double>(p.rank()) - 1.0;
    case Alpha::Tag::One: return shannon_entropy(p);
    case Alpha::Tag::PosInfinity: return 0.0;
    case Alpha::Tag::NegInfinity:
      require_full_rank(p, "entropy of order -infinity");
      return std::log(p.min());
    case Alpha::Tag::Finite: break;
  }
  const double a = alpha.value();
  if (a < 0.0) require_full_rank(p, "entropy of negative order");
  return alpha.sgn() / (1.0 - a) * std::expm1(log_power_sum(p, a));
}

namespace {

// Limits shared by both families: Kullback-Leibler at one, max log-ratio at
// the infinite orders.
double kullback_leibler(const ProbDist& p, const ProbDist& q) {
  double d = 0.0;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (p[i] == 0.0) continue;
    if (q[i] == 0.0) return kInf;
    d += p[i] * std::log(p[i] / q[i]);
  }
  return d;
}

double max_log_ratio(const ProbDist& p, const ProbDist& q) {
  double best = 0.0;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (p[i] == 0.0) continue;
    if (q[i] == 0.0) return kInf;
    best = std::max(best, p[i] / q[i]);
  }
  return std::log(best);
}

// Mass of q outside supp(p); equals 1 - sum_{p_i != 0} q_i.
double mass_outside_support(const ProbDist& p, const ProbDist& q) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (p[i] == 0.0) s += q[i];
  }
  return s;
}

}  // namespace

DivergenceResult renyi_divergence(const ProbDist& p, const ProbDist& q, Alpha alpha) {
  require_same_dim(p, q);
  switch (alpha.tag()) {
    case Alpha::Tag::Zero: {
      const double outside = mass_outside_support(p, q);
      if (outside >= 1.0) return DivergenceResult::infinity();
      return -std::log1p(-outside);
    }
    case Alpha::Tag::One: return kullback_leibler(p, q);
    case Alpha::Tag::PosInfinity: return max_log_ratio(p, q);
    case Alpha::Tag::NegInfinity:
      require_full_rank(p, "divergence of order -infinity");
      require_full_rank(q, "divergence of order -infinity");
      return max_log_ratio(q, p);
    case Alpha::Tag::Finite: break;
  }
  const double a = alpha.value();
  if (a < 0.0) {
    require_full_rank(p, "divergence of negative order");
    require_full_rank(q, "divergence of negative order");
  }
  const double l = log_power_sum(p, q, a);
  if (l == kInf) return DivergenceResult::infinity();
  if (l == -kInf) return DivergenceResult::infinity();  // 0 < a < 1, disjoint supports
  return alpha.sgn() / (a - 1.0) * l;
}

DivergenceResult tsallis_divergence(const ProbDist& p, const ProbDist& q, Alpha alpha) {
  require_same_dim(p, q);
  switch (alpha.tag()) {
    case Alpha::Tag::Zero: return mass_outside_support(p, q);
    case Alpha::Tag::One: return kullback_leibler(p, q);
    case Alpha::Tag::PosInfinity: return max_log_ratio(p, q);
    case Alpha::Tag::NegInfinity:
      require_full_rank(p, "divergence of order -infinity");
      require_full_rank(q, "divergence of order -infinity");
      return max_log_ratio(q, p);
    case Alpha::Tag::Finite: break;
  }
  const double a = alpha.value();
  if (a < 0.0) {
    require_full_rank(p, "divergence of negative order");
    require_full_rank(q, "divergence of negative order");
  }
  const double l = log_power_sum(p, q, a);
  if (l == kInf) return DivergenceResult::infinity();
  const double value = alpha.sgn() / (a - 1.0) * std::expm1(l);
  if (!std::isfinite(value)) return DivergenceResult::infinity();
  return value;
}

DivergenceResult divergence(Family family, const ProbDist& p, const ProbDist& q, Alpha alpha) {
  return family == Family::Renyi ? renyi_divergence(p, q, alpha) : tsallis_divergence(p, q, alpha);
}

DivergenceResult compose_tsallis(DivergenceResult dpq, DivergenceResult drs, Alpha alpha) {
  if (!alpha.is_finite()) fail(ErrorCode::DomainError, "composition law needs a finite order");
  if (dpq.is_infinite() || drs.is_infinite()) {
    fail(ErrorCode::OverflowToInfinity, "cannot compose an infinite divergence");
  }
  const double x = dpq.value();
  const double y = drs.value();
  return x + y + alpha.sgn() * (alpha.value() - 1.0) * x * y;
}

double tsallis_from_renyi(double renyi, Alpha alpha) {
  if (!alpha.is_finite() || alpha.is_one()) fail(ErrorCode::DomainError, "bridge needs finite alpha != 1");
  const double k = alpha.value() - 1.0;
  return alpha.sgn() * std::expm1(alpha.sgn() * k * renyi) / k;
}

double renyi_from_tsallis(double tsallis, Alpha alpha) {
  if (!alpha.is_finite() || alpha.is_one()) fail(ErrorCode::DomainError, "bridge needs finite alpha != 1");
  const double k = alpha.value() - 1.0;
  return alpha.sgn() * std::log1p(alpha.sgn() * k * tsallis) / k;
}

}  // namespace thermocat
