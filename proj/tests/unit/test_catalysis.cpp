#include <gtest/gtest.h>

#include <cmath>

#include "expect_error.hpp"
#include "thermocat/thermocat.hpp"

namespace thermocat {
namespace {

using testing::expect_code;

struct DemoSystem {
  GibbsContext ctx{{0.0, 2.0}, 2.0};
  ProbDist p = gibbs_dist(GibbsContext({0.0, 2.0}, 0.2));
  ProbDist pp = gibbs_dist(GibbsContext({0.0, 2.0}, 1.0));
};

TEST(Profiles, Distributed) {
  const CatalystProfile c = profile_distributed(4, 0.1);
  const double expected[] = {0.3, 0.3, 0.2, 0.2};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(c.p_init[i], expected[i], 1e-15);
  EXPECT_EQ(c.q_final, ProbDist::uniform(4));
  EXPECT_NEAR(c.epsilon, 0.1, 1e-15);
  EXPECT_NEAR(total_variation(c.p_init, c.q_final), 0.1, 1e-15);
}

TEST(Profiles, Concentrated) {
  const CatalystProfile c = profile_concentrated(4, 0.1);
  const double expected[] = {0.35, 0.15, 0.25, 0.25};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(c.p_init[i], expected[i], 1e-15);
  EXPECT_NEAR(total_variation(c.p_init, c.q_final), 0.1, 1e-15);
}

TEST(Profiles, Errors) {
  expect_code(ErrorCode::OddDimension, [] { (void)profile_distributed(5, 0.01); });
  expect_code(ErrorCode::EpsilonTooLarge, [] { (void)profile_concentrated(4, 0.3); });
  expect_code(ErrorCode::EpsilonTooLarge, [] { (void)profile_distributed(4, 0.6); });
  expect_code(ErrorCode::DimensionMismatch,
              [] { (void)make_profile(ProbDist::uniform(2), ProbDist::uniform(3)); });
}

TEST(ExactDelta, Examples) {
  const ProbDist gm = ProbDist::uniform(3);
  const ProbDist sigma = ProbDist::make({0.5, 0.3, 0.2});
  EXPECT_EQ(exact_catalytic_delta(0.0, sigma, gm, Alpha::finite(2.0)), 0.0);
  EXPECT_NEAR(exact_catalytic_delta(-0.4, gm, gm, Alpha::finite(2.0)), -0.4, 1e-15);
}

TEST(AthermalityCap, Values) {
  EXPECT_DOUBLE_EQ(athermality_cap(0.5), 2.0);
  EXPECT_GT(athermality_cap(1.0 - 1e-9), 1e8);
  expect_code(ErrorCode::DomainError, [] { (void)athermality_cap(1.5); });
  expect_code(ErrorCode::DomainError, [] { (void)athermality_cap(0.0); });
}

TEST(ApproxDelta, ExactReturn) {
  const DemoSystem s;
  const CatalystProfile prof = make_profile(ProbDist::make({0.4, 0.35, 0.25}), ProbDist::make({0.4, 0.35, 0.25}));
  for (double a : {0.5, 2.0, 3.0}) {
    const ApproxDeltaBreakdown b = approx_catalytic_delta(s.p, s.pp, s.ctx, prof, a);
    EXPECT_NEAR(b.delta_total, std::pow(3.0, a - 1.0) * b.P_alpha * b.delta_system, 1e-12);
  }
}

TEST(ApproxDelta, UniformCatalystLeavesSystemDelta) {
  const DemoSystem s;
  const CatalystProfile prof = make_profile(ProbDist::uniform(4), ProbDist::uniform(4));
  for (double a : {0.5, 2.0, 3.0}) {
    const ApproxDeltaBreakdown b = approx_catalytic_delta(s.p, s.pp, s.ctx, prof, a);
    EXPECT_NEAR(b.P_alpha, std::pow(4.0, 1.0 - a), 1e-15);
    EXPECT_NEAR(b.delta_total, b.delta_system, 1e-12);
  }
}

TEST(ApproxDelta, MatchesTensorStateEvaluation) {
  const DemoSystem s;
  struct Case {
    ProfileKind kind;
    std::size_t d;
    double eps;
    double alpha;
    double expected;
  };
  const Case cases[] = {
      {ProfileKind::Distributed, 4, 0.1, 2.0, -4.0559516326961893},
      {ProfileKind::Concentrated, 4, 0.1, 0.5, -0.13359744182799541},
      {ProfileKind::Distributed, 8, 0.001, 3.0, -48.517003033617345},
  };
  for (const auto& c : cases) {
    const CatalystProfile prof = make_profile(c.kind, c.d, c.eps);
    EXPECT_NEAR(approx_catalytic_delta(s.p, s.pp, s.ctx, prof, c.alpha).delta_total, c.expected,
                1e-10 * std::abs(c.expected));
    EXPECT_NEAR(direct_catalytic_delta(s.p, s.pp, s.ctx, prof, c.alpha), c.expected, 1e-10 * std::abs(c.expected));
  }
}

TEST(ApproxDelta, Errors) {
  const DemoSystem s;
  const CatalystProfile prof = profile_distributed(4, 0.01);
  expect_code(ErrorCode::AlphaOne, [&] { (void)approx_catalytic_delta(s.p, s.pp, s.ctx, prof, 1.0); });
  expect_code(ErrorCode::DomainError, [&] { (void)approx_catalytic_delta(s.p, s.pp, s.ctx, prof, -1.0); });
}

TEST(ContinuityBound, ClosedForms) {
  EXPECT_NEAR(continuity_bound(1.0, 0.05, 4), 0.1, 1e-15);
  EXPECT_NEAR(continuity_bound(0.5, 0.02, 16), 0.8, 1e-15);
  EXPECT_NEAR(continuity_bound(3.0, 0.01, 8), 0.06, 1e-15);
  expect_code(ErrorCode::DomainError, [] { (void)continuity_bound(0.0, 0.1, 4); });
}

TEST(EpsBound, ClosedForms) {
  EXPECT_EQ(eps_bound(2.0, 0.5, 0.0, 1.0, 4), 0.0);
  EXPECT_NEAR(eps_bound(2.0, 0.5, -0.2, 1.0, 4), 0.025, 1e-15);
  expect_code(ErrorCode::DomainError, [] { (void)eps_bound(2.0, 0.5, 0.1, 1.0, 4); });
  expect_code(ErrorCode::DomainError, [] { (void)eps_bound(2.0, 0.5, -0.1, 0.0, 4); });
}

TEST(EpsBound, RoundTripsThroughContinuity) {
  const double P = 0.6;
  const double dF = -0.3;
  const double FA = 1.7;
  for (double a : {0.4, 0.8, 2.0, 3.0}) {
    const double eps = eps_bound(a, P, dF, FA, 8);
    EXPECT_NEAR(continuity_bound(a, eps, 8) * FA, P * -dF, 1e-12) << a;
  }
}

TEST(Gaps, ZeroPerturbation) {
  EXPECT_NEAR(gap_exact(profile_distributed(8, 0.0), 2.0), 0.0, 1e-15);
  EXPECT_EQ(gap_leading_order(ProfileKind::Concentrated, 8, 0.0, 2.0), 0.0);
}

TEST(Gaps, LeadingOrderAccuracy) {
  for (ProfileKind k : {ProfileKind::Distributed, ProfileKind::Concentrated}) {
    const double exact = gap_exact(make_profile(k, 8, 1e-3), 2.0);
    const double lead = gap_leading_order(k, 8, 1e-3, 2.0);
    EXPECT_LT(std::abs(exact - lead) / std::abs(lead), 0.05);
  }
  EXPECT_NEAR(gap_leading_order(ProfileKind::Concentrated, 8, 1e-3, 2.0), -2e-6, 1e-18);
  EXPECT_NEAR(gap_leading_order(ProfileKind::Distributed, 8, 1e-3, 2.0), -4e-6 / 8.0, 1e-18);
}

TEST(Gaps, SignStructure) {
  for (double a : {0.3, 0.7}) EXPECT_GE(gap_exact(profile_concentrated(8, 0.05), a), 0.0);
  for (double a : {1.5, 3.0}) EXPECT_LE(gap_exact(profile_concentrated(8, 0.05), a), 0.0);
}

TEST(LeadingOrderDelta, Limits) {
  EXPECT_EQ(leading_order_delta(ProfileKind::Distributed, 8, 0.0, -0.3, 1.2, 2.0), -0.3);
  EXPECT_EQ(leading_order_delta(ProfileKind::Concentrated, 8, 0.01, -0.3, 1.2, 1.0), -0.3);
}

TEST(LeadingOrderDelta, TracksExactAssembly) {
  const DemoSystem s;
  const std::size_t d = 8;
  const double a = 2.0;
  const CatalystProfile prof = profile_distributed(d, 1e-3);
  const ApproxDeltaBreakdown b = approx_catalytic_delta(s.p, s.pp, s.ctx, prof, a);
  const double F_init = tsallis_free_energy(s.p, s.ctx, Alpha::finite(a)).value.value();
  const double lead = leading_order_delta(ProfileKind::Distributed, d, 1e-3, b.delta_system, F_init + b.A_alpha, a);
  EXPECT_LT(std::abs(b.delta_total - lead) / std::abs(lead), 0.05);
}

TEST(Sweep, RowsAndDeterminism) {
  const DemoSystem s;
  const auto rows = catalysis_sweep({ProfileKind::Distributed, ProfileKind::Concentrated}, {4, 8}, {1e-3},
                                    {0.5, 2.0}, s.p, s.pp, s.ctx);
  EXPECT_EQ(rows.size(), 8u);
  const auto again = catalysis_sweep({ProfileKind::Distributed, ProfileKind::Concentrated}, {4, 8}, {1e-3},
                                     {0.5, 2.0}, s.p, s.pp, s.ctx);
  EXPECT_EQ(sweep_csv(rows), sweep_csv(again));
  for (const auto& r : rows) EXPECT_NEAR(r.gap_exact, r.Q_alpha - r.P_alpha, 1e-15);
}

}  // namespace
}  // namespace thermocat
