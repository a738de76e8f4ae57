#include "thermocat/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "json.hpp"
#include "thermocat/divergences.hpp"
#include "thermocat/error.hpp"

namespace thermocat {
namespace {

using Json = nlohmann::ordered_json;

Json number(double x) {
  if (x == 0.0) return 0.0;  // drop the sign of zero so output re-parses identically
  if (std::isfinite(x)) return x;
  return format_number(x);
}

Json numbers(const std::vector<double>& xs) {
  Json a = Json::array();
  for (double x : xs) a.push_back(number(x));
  return a;
}

Json numbers(std::span<const double> xs) {
  Json a = Json::array();
  for (double x : xs) a.push_back(number(x));
  return a;
}

Json alpha_json(Alpha a) {
  if (a.is_finite()) return a.value();
  return to_string(a);
}

Json curve_json(const ThermoCurve& c) {
  Json a = Json::array();
  for (const auto& pt : c.breakpoints) a.push_back(Json::array({number(pt.x), number(pt.y)}));
  return a;
}

void write_string(const std::string& s, std::string& out) {
  out += Json(s).dump();  // reuse the library's escaping
}

void write(const Json& j, std::string& out, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(2 * depth), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        write_string(it.key(), out);
        out += ": ";
        write(it.value(), out, depth + 1);
      }
      out += "\n" + close + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      const bool flat = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
      out += flat ? "[" : "[\n";
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += flat ? ", " : ",\n";
        first = false;
        if (!flat) out += pad;
        write(e, out, depth + 1);
      }
      out += flat ? "]" : "\n" + close + "]";
      return;
    }
    case Json::value_t::number_float: out += format_number(j.get<double>()); return;
    case Json::value_t::string: write_string(j.get<std::string>(), out); return;
    default: out += j.dump(); return;
  }
}

std::string render(const Json& j) {
  std::string out;
  write(j, out, 0);
  out += "\n";
  return out;
}

Json verdict_json(const Verdict& v) {
  Json j;
  j["verdict"] = verdict_label(v.allowed);
  if (v.curve_witness) {
    j["witness"] = {{"x", number(v.curve_witness->x)},
                    {"y_init", number(v.curve_witness->y_init)},
                    {"y_final", number(v.curve_witness->y_final)}};
  }
  if (v.alpha_witness) j["alpha"] = alpha_json(*v.alpha_witness);
  return j;
}

Json mi_json(const MIReport& m) {
  return {{"h_s", number(m.h_s)}, {"h_m", number(m.h_m)}, {"h_joint", number(m.h_joint)},
          {"mi_bits", number(m.mutual_info)}};
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_short(double x) {
  if (!std::isfinite(x)) return format_number(x);
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string scan_report_json(const ScanReport& r) {
  Json j;
  Json grid = Json::array();
  for (Alpha a : r.grid) grid.push_back(alpha_json(a));
  j["grid"] = grid;
  j["kBT"] = number(r.kBT);
  j["deltas_renyi"] = numbers(r.deltas_renyi);
  j["deltas_tsallis"] = numbers(r.deltas_tsallis);
  j["deltas_renyi_nats"] = numbers(r.deltas_renyi_nats);
  j["deltas_tsallis_nats"] = numbers(r.deltas_tsallis_nats);
  j["allowed"] = r.allowed;
  j["allowed_renyi"] = r.allowed_renyi;
  j["allowed_tsallis"] = r.allowed_tsallis;
  j["verdict"] = verdict_label(r.allowed);
  if (r.first_violation) {
    j["first_violation"] = {{"alpha", alpha_json(r.first_violation->alpha)},
                            {"family", to_string(r.first_violation->family)},
                            {"delta", number(r.first_violation->delta)}};
  } else {
    j["first_violation"] = nullptr;
  }
  return render(j);
}

std::string divergence_table_json(const ProbDist& p, const ProbDist& q, const std::vector<Alpha>& grid) {
  Json j;
  j["p"] = numbers(p.weights());
  j["q"] = numbers(q.weights());
  Json g = Json::array();
  Json renyi = Json::array();
  Json tsallis = Json::array();
  for (Alpha a : grid) {
    g.push_back(alpha_json(a));
    renyi.push_back(number(renyi_divergence(p, q, a).value()));
    tsallis.push_back(number(tsallis_divergence(p, q, a).value()));
  }
  j["grid"] = g;
  j["renyi"] = renyi;
  j["tsallis"] = tsallis;
  return render(j);
}

std::string scenario_json(const ScenarioReport& r) {
  Json j;
  j["convention"] = r.convention;
  j["params"] = {{"E_g", number(r.params.E_g)},     {"E_e", number(r.params.E_e)},
                 {"beta1", number(r.params.beta1)}, {"beta2", number(r.params.beta2)},
                 {"beta3", number(r.params.beta3)}, {"beta_b", number(r.params.beta_b)}};
  j["gibbs"] = numbers(r.gibbs.weights());
  j["initial"] = {{"pops", numbers(std::span<const double>(r.initial.pops))}, {"mi", mi_json(r.initial_mi)}};
  Json states = Json::array();
  for (const auto& s : r.states) {
    Json e;
    e["name"] = s.name;
    e[s.family == "cc" ? "chi" : "lambda"] = number(s.parameter);
    e["pops"] = numbers(std::span<const double>(s.state.pops));
    e["coherence"] = number(s.state.coherence);
    e["spectrum"] = numbers(s.spectrum.weights());
    e["marginal_s"] = numbers(s.marginal_s.weights());
    e["marginal_m"] = numbers(s.marginal_m.weights());
    e["mi"] = mi_json(s.mi);
    e["mi_bits"] = number(s.mi.mutual_info);
    const Json v = verdict_json(s.verdict);
    e["verdict"] = v["verdict"];
    if (v.contains("witness")) e["witness"] = v["witness"];
    e["curve"] = curve_json(s.curve);
    states.push_back(e);
  }
  j["states"] = states;
  j["reference_curve"] = curve_json(r.reference_curve);
  j["initial_curve"] = curve_json(r.initial_curve);
  return render(j);
}

std::string canonical_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    fail(ErrorCode::DomainError, std::string("malformed JSON: ") + e.what());
  }
  return render(j);
}

std::string curve_csv(const ThermoCurve& c) {
  std::string out = "x,y\n";
  for (const auto& pt : c.breakpoints) out += format_number(pt.x) + "," + format_number(pt.y) + "\n";
  return out;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "kind,d_M,epsilon,alpha,P_alpha,Q_alpha,gap_exact,gap_leading,delta_total\n";
  for (const auto& r : rows) {
    out += std::string(to_string(r.kind)) + "," + std::to_string(r.d_M) + "," + format_number(r.epsilon) + "," +
           format_number(r.alpha) + "," + format_number(r.P_alpha) + "," + format_number(r.Q_alpha) + "," +
           format_number(r.gap_exact) + "," + format_number(r.gap_leading) + "," + format_number(r.delta_total) +
           "\n";
  }
  return out;
}

}  // namespace thermocat
