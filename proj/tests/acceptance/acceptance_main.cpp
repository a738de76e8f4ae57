// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "suites.hpp"
#include "thermocat/thermocat.hpp"

namespace fs = std::filesystem;
using namespace thermocat;
using thermocat::testing::SuiteResult;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Median wall time of repeated runs, in seconds.
double median_time(const std::function<void()>& body, int runs = 51) {
  std::vector<double> t;
  for (int i = 0; i < runs; ++i) {
    const auto t0 = Clock::now();
    body();
    t.push_back(seconds_since(t0));
  }
  std::sort(t.begin(), t.end());
  return t[t.size() / 2];
}

struct Criterion {
  int id;
  std::string title;
  bool pass = true;
  std::vector<std::string> details;

  void check(bool ok, const std::string& what) {
    pass = pass && ok;
    details.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
};

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string ms(double s) { return num(s * 1e3) + " ms"; }

void report(const Criterion& c) {
  std::cout << (c.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << "\n";
  for (const auto& d : c.details) std::cout << "        " << d << "\n";
}

void add_suite(Criterion& c, const SuiteResult& s) {
  std::string line = s.name + ": " + std::to_string(s.trials - s.failures) + "/" + std::to_string(s.trials) +
                     " passed, worst " + num(s.worst);
  if (!s.note.empty()) line += " (" + s.note + ")";
  c.check(s.ok(), line);
}

const ScenarioParams kParams{};

Criterion criterion1() {
  Criterion c{1, "system free-energy changes along the demo path"};
  const GibbsContext ctx({kParams.E_g, kParams.E_e}, kParams.beta_b);
  const std::vector<double> energies{kParams.E_g, kParams.E_e};
  const ProbDist p = gibbs_dist(GibbsContext(energies, kParams.beta2));
  const ProbDist pp = gibbs_dist(GibbsContext(energies, kParams.beta3));
  const std::vector<Alpha> grid{Alpha::zero(), Alpha::one(), Alpha::pos_infinity()};
  const ScanReport s = second_law_scan(p, pp, ctx, grid);
  const double expected[] = {0.0, -0.4101, -0.6070};
  const double nats[] = {0.0, -0.82023133819395756, -1.2139127586430199};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double got = s.deltas_renyi[i];
    c.check(std::abs(got - expected[i]) <= 5e-4,
            "alpha=" + to_string(grid[i]) + ": " + num(got) + " vs " + num(expected[i]) + " (tol 5e-4)");
    c.check(std::abs(s.deltas_renyi_nats[i] - nats[i]) <= 1e-12,
            "alpha=" + to_string(grid[i]) + " raw nats " + num(s.deltas_renyi_nats[i]) + " vs oracle " + num(nats[i]));
  }
  const double t = median_time([&] { (void)second_law_scan(p, pp, ctx, grid); });
  c.check(t < 1e-3, "median runtime " + ms(t) + " < 1 ms");
  return c;
}

Criterion criterion2() {
  Criterion c{2, "classical-correlation positivity interval"};
  const auto [lo, hi] = chi_interval(kParams);
  c.check(std::abs(lo - -0.0537) <= 1e-4, "lower " + num(lo) + " vs -0.0537 (tol 1e-4)");
  c.check(std::abs(hi - 0.0655) <= 1e-4, "upper " + num(hi) + " vs 0.0655 (tol 1e-4)");
  const double t = median_time([] { (void)chi_interval(kParams); });
  c.check(t < 1e-3, "median runtime " + ms(t) + " < 1 ms");
  return c;
}

// Mutual information from eigenvalues and the diagonal, independent of the
// entropy helpers.
double mi_second_path(const JointQubitState& s) {
  const ProbDist ev = block_spectrum(s);
  const double ms0 = s.pops[0] + s.pops[1];
  const double mm0 = s.pops[0] + s.pops[2];
  const double ms[] = {ms0, 1.0 - ms0};
  const double mm[] = {mm0, 1.0 - mm0};
  double acc = 0.0;
  for (double v : ev) {
    if (v > 0.0) acc += v * std::log(v);
  }
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      const double w = s.pops[2 * a + b];
      if (w > 0.0) acc -= w * std::log(ms[a] * mm[b]);
    }
  }
  return acc / std::log(2.0);
}

Criterion criterion3() {
  Criterion c{3, "mutual information of the correlated final states"};
  struct Case {
    std::string name;
    JointQubitState state;
    double paper;
    double tol;
  };
  const std::vector<Case> cases = {
      {"cc(chi=0.05)", build_cc(kParams, 0.05), 0.0746, 1e-3},
      {"qc(lambda=0.0947)", build_qc(kParams, 0.0947), 0.0746, 1e-3},
      {"cc(chi=0.065)", build_cc(kParams, 0.065), 0.1463, 3e-3},
  };
  for (const auto& k : cases) {
    const double a = mutual_information(k.state).mutual_info;
    const double b = mi_second_path(k.state);
    c.check(std::abs(a - b) <= 1e-9, k.name + " two code paths agree: |" + num(a) + " - " + num(b) + "| <= 1e-9");
    c.check(std::abs(a - k.paper) <= k.tol, k.name + " = " + num(a) + " bits vs " + num(k.paper) + " (tol " +
                                                num(k.tol) + ", residual " + num(a - k.paper) + ")");
  }
  return c;
}

Criterion criterion4() {
  Criterion c{4, "demo verdicts and the analytic curve point"};
  const std::vector<double> chis{0.05, 0.065};
  const std::vector<double> lambdas{0.0947};
  const ScenarioReport r = scenario_report(kParams, chis, lambdas);
  const bool expected[] = {true, false, false};
  for (std::size_t i = 0; i < r.states.size() && i < 3; ++i) {
    const auto& s = r.states[i];
    c.check(s.verdict.allowed == expected[i],
            s.name + " " + verdict_label(s.verdict.allowed) + " (expected " + verdict_label(expected[i]) + ")");
  }
  c.check(r.states.size() == 3, "three final states reported");
  const double x = 1.0 - ground_occupation(kParams, kParams.beta_b);
  const double y = 1.0 - ground_occupation(kParams, kParams.beta1);
  for (std::size_t i = 0; i < 2 && i < r.states.size(); ++i) {
    const double got = eval(r.states[i].curve, x);
    c.check(std::abs(got - y) <= 1e-12,
            r.states[i].name + " curve at x=" + num(x) + ": " + num(got) + " vs " + num(y) + " (tol 1e-12)");
  }
  const double t = median_time([&] { (void)scenario_report(kParams, chis, lambdas); }, 21);
  c.check(t < 10e-3, "median runtime " + ms(t) + " < 10 ms");
  return c;
}

Criterion run_suites(int id, const std::string& title, const std::vector<std::function<SuiteResult()>>& suites,
                     double limit_s) {
  Criterion c{id, title};
  const auto t0 = Clock::now();
  for (const auto& s : suites) add_suite(c, s());
  const double t = seconds_since(t0);
  c.check(t < limit_s, "runtime " + num(t) + " s < " + num(limit_s) + " s");
  return c;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::map<std::string, std::string> read_dir(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::directory_iterator(dir)) files[e.path().filename().string()] = read_file(e.path());
  return files;
}

Criterion criterion8() {
  Criterion c{8, "curve CSV export is byte-stable"};
  const std::vector<double> chis{0.05, 0.065};
  const std::vector<double> lambdas{0.0947};
  const ScenarioReport a = scenario_report(kParams, chis, lambdas);
  const ScenarioReport b = scenario_report(kParams, chis, lambdas);
  bool same = curve_csv(a.reference_curve) == curve_csv(b.reference_curve) &&
              curve_csv(a.initial_curve) == curve_csv(b.initial_curve);
  for (std::size_t i = 0; i < a.states.size(); ++i) same = same && curve_csv(a.states[i].curve) == curve_csv(b.states[i].curve);
  c.check(same, "in-process exports identical across runs");

  const char* cli = std::getenv("THERMOCAT_CLI_PATH");
  if (cli == nullptr || *cli == '\0') {
    c.check(false, "THERMOCAT_CLI_PATH not set; command-line export not checked");
    return c;
  }
  const fs::path root = fs::temp_directory_path() / ("thermocat_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(root);
  std::vector<std::map<std::string, std::string>> runs;
  for (int k = 0; k < 2; ++k) {
    const fs::path dir = root / ("run" + std::to_string(k));
    fs::create_directories(dir);
    const std::string cmd =
        "\"" + std::string(cli) + "\" correlated-demo --csv-dir \"" + dir.string() + "\" > \"" + (dir / "out.json").string() + "\"";
    const int rc = std::system(cmd.c_str());
    c.check(rc == 0, "command-line run " + std::to_string(k + 1) + " exit status " + std::to_string(rc));
    runs.push_back(read_dir(dir));
  }
  fs::remove_all(root);
  c.check(runs[0].size() > 1 && runs[0] == runs[1],
          "command-line exports identical across runs (" + std::to_string(runs[0].size()) + " files)");
  return c;
}

}  // namespace

int main() {
  namespace t = thermocat::testing;
  std::vector<Criterion> all;
  all.push_back(criterion1());
  all.push_back(criterion2());
  all.push_back(criterion3());
  all.push_back(criterion4());
  all.push_back(run_suites(5, "divergence property suites",
                           {[] { return t::suite_nonnegativity(); }, [] { return t::suite_data_processing(); },
                            [] { return t::suite_pseudo_additivity(); }, [] { return t::suite_bridges(); },
                            [] { return t::suite_duality(); }, [] { return t::suite_embedding(); },
                            [] { return t::suite_uniform_reference(); }, [] { return t::suite_range_bound(); },
                            [] { return t::suite_renyi_monotonicity(); }, [] { return t::suite_scan_agreement(); }},
                           30.0));
  all.push_back(run_suites(6, "catalysis approximations",
                           {[] { return t::suite_delta_routes(); }, [] { return t::suite_continuity(); },
                            [] { return t::suite_leading_gaps(); }, [] { return t::suite_leading_ratio(); }},
                           5.0));
  all.push_back(run_suites(7, "constructive rationalization and perturbation",
                           {[] { return t::suite_rationalize_distance(); },
                            [] { return t::suite_rationalize_channels(); },
                            [] { return t::suite_perturb_full_rank(); },
                            [] { return t::suite_perturb_schedule_sum(); }},
                           5.0));
  all.push_back(criterion8());

  int failed = 0;
  for (const auto& c : all) {
    report(c);
    if (!c.pass) ++failed;
  }
  std::cout << (failed == 0 ? "ALL PASS" : std::to_string(failed) + " criterion(s) FAILED") << "\n";
  return failed == 0 ? 0 : 1;
}
