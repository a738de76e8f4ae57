#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "expect_error.hpp"
#include "thermocat/thermocat.hpp"

namespace thermocat {
namespace {

TEST(FormatNumber, SeventeenDigits) {
  EXPECT_EQ(format_number(0.1), "0.10000000000000001");
  EXPECT_EQ(format_number(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(format_number(-std::numeric_limits<double>::infinity()), "-inf");
  EXPECT_EQ(format_short(0.1), "0.1");
}

TEST(CurveCsv, HeaderAndRows) {
  const std::string csv = curve_csv(thermo_curve(ProbDist::uniform(2), ProbDist::uniform(2)));
  EXPECT_EQ(csv, "x,y\n0,0\n1,1\n");
}

TEST(ScanJson, RoundTripsAndKeepsKeyOrder) {
  const GibbsContext ctx({0.0, 2.0}, 2.0);
  const ProbDist p = gibbs_dist(GibbsContext({0.0, 2.0}, 0.2));
  const ProbDist pp = ProbDist::make({1.0, 0.0});
  const std::string json = scan_report_json(second_law_scan(p, pp, ctx, default_alpha_grid()));
  EXPECT_EQ(canonical_json(json), json);
  EXPECT_LT(json.find("\"grid\""), json.find("\"kBT\""));
  EXPECT_LT(json.find("\"verdict\""), json.find("\"first_violation\""));
  EXPECT_NE(json.find("\"forbidden\""), std::string::npos);
}

TEST(DivergenceJson, RoundTrips) {
  const std::string json =
      divergence_table_json(ProbDist::make({0.75, 0.25, 0.0}), ProbDist::make({0.5, 0.0, 0.5}), default_alpha_grid());
  EXPECT_EQ(canonical_json(json), json);
  EXPECT_NE(json.find("\"inf\""), std::string::npos);
}

TEST(ScenarioJson, RoundTrips) {
  const std::string json = scenario_json(scenario_report(ScenarioParams{}, {0.05, 0.065}, {0.0947}));
  EXPECT_EQ(canonical_json(json), json);
  EXPECT_NE(json.find("\"cc(chi=0.05)\""), std::string::npos);
}

TEST(CanonicalJson, RejectsMalformedInput) {
  testing::expect_code(ErrorCode::DomainError, [] { (void)canonical_json("{\"a\": "); });
}

TEST(SweepCsv, Header) {
  const std::string csv = sweep_csv({});
  EXPECT_EQ(csv, "kind,d_M,epsilon,alpha,P_alpha,Q_alpha,gap_exact,gap_leading,delta_total\n");
}

}  // namespace
}  // namespace thermocat
