#pragma once

#include <string>
#include <vector>

#include "thermocat/alpha.hpp"
#include "thermocat/catalysis.hpp"
#include "thermocat/correlated.hpp"
#include "thermocat/free_energy.hpp"
#include "thermocat/majorization.hpp"
#include "thermocat/prob_dist.hpp"

namespace thermocat {

/// %.17g; "inf", "-inf" and "nan" for the non-finite values.
std::string format_number(double x);
/// Shortest decimal that reads back to the same double.
std::string format_short(double x);

// JSON writers. Numbers carry 17 significant digits, non-finite numbers are
// written as strings and verdicts as "allowed" / "forbidden".
std::string scan_report_json(const ScanReport& report);
std::string divergence_table_json(const ProbDist& p, const ProbDist& q, const std::vector<Alpha>& grid);
std::string scenario_json(const ScenarioReport& report);

/// Parses JSON text and writes it back in the canonical form above.
/// Error(DomainError) on malformed input.
std::string canonical_json(const std::string& text);

/// Header `x,y`, one breakpoint per row.
std::string curve_csv(const ThermoCurve& curve);
/// Header kind,d_M,epsilon,alpha,P_alpha,Q_alpha,gap_exact,gap_leading,delta_total.
std::string sweep_csv(const std::vector<SweepRow>& rows);

inline const char* verdict_label(bool allowed) { return allowed ? "allowed" : "forbidden"; }

}  // namespace thermocat
