#include "thermocat_cli/command.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "thermocat/thermocat.hpp"

namespace thermocat::cli {
namespace {

enum class Kind {
  Number,      // one real
  NumberList,  // comma-separated reals, may be empty
  SizeList,    // comma-separated positive integers
  AlphaList,   // "default" or comma-separated alpha labels
  Dist,        // comma-separated weights or thermal:<beta>
  OptDist,     // Dist or empty
  Kinds,       // both | distributed | concentrated
  Path,        // free text, may be empty
  Flag,
};

struct OptionSpec {
  const char* name;
  Kind kind;
  const char* default_value;
  const char* help;
};

struct CommandSpec {
  const char* name;
  const char* help;
  std::vector<OptionSpec> options;
};

const std::vector<CommandSpec>& command_table() {
  static const std::vector<CommandSpec> table = {
      {"divergence",
       "Renyi and Tsallis divergences D(p||q) over an alpha grid (JSON)",
       {{"p", Kind::Dist, "0.75,0.25", "first distribution"},
        {"q", Kind::Dist, "0.5,0.5", "second distribution"},
        {"grid", Kind::AlphaList, "default", "alpha grid: 'default' or labels such as 0,0.5,1,inf"}}},
      {"scan",
       "free-energy scan of p -> pp against the Gibbs state (JSON)",
       {{"p", Kind::Dist, "thermal:0.2", "initial state, weights or thermal:<beta>"},
        {"pp", Kind::Dist, "thermal:1", "final state, weights or thermal:<beta>"},
        {"energies", Kind::NumberList, "0,2", "energy levels"},
        {"beta", Kind::Number, "2", "bath inverse temperature"},
        {"grid", Kind::AlphaList, "default", "alpha grid"},
        {"tol", Kind::Number, "1e-10", "violation tolerance"},
        {"fail-on-forbidden", Kind::Flag, "false", "exit 1 when the transition is forbidden"}}},
      {"curve",
       "thermo-majorization curve breakpoints of p (CSV)",
       {{"p", Kind::Dist, "0.75,0.25", "state, weights or thermal:<beta>"},
        {"g", Kind::OptDist, "", "reference distribution; defaults to the Gibbs state"},
        {"energies", Kind::NumberList, "0,2", "energy levels"},
        {"beta", Kind::Number, "2", "bath inverse temperature"},
        {"pp", Kind::OptDist, "", "optional final state; its verdict goes to stderr"},
        {"fail-on-forbidden", Kind::Flag, "false", "exit 1 when p -> pp is forbidden"}}},
      {"catalysis-sweep",
       "approximate-return catalysis sweep (CSV)",
       {{"kind", Kind::Kinds, "both", "both, distributed or concentrated"},
        {"d", Kind::SizeList, "4,8,16", "catalyst dimensions"},
        {"eps", Kind::NumberList, "0.001", "return errors"},
        {"alpha", Kind::NumberList, "0.5,2,3", "orders (alpha >= 0, alpha != 1)"},
        {"p-sys", Kind::Dist, "thermal:0.2", "initial system state"},
        {"pp-sys", Kind::Dist, "thermal:1", "final system state"},
        {"energies", Kind::NumberList, "0,2", "system energy levels"},
        {"beta", Kind::Number, "2", "bath inverse temperature"}}},
      {"correlated-demo",
       "two-qubit correlated-catalyst scenario report (JSON)",
       {{"Eg", Kind::Number, "0", "ground energy"},
        {"Ee", Kind::Number, "2", "excited energy"},
        {"beta1", Kind::Number, "0.1", "catalyst inverse temperature"},
        {"beta2", Kind::Number, "0.2", "initial system inverse temperature"},
        {"beta3", Kind::Number, "1", "final system inverse temperature"},
        {"beta-b", Kind::Number, "2", "bath inverse temperature"},
        {"chi", Kind::NumberList, "0.05,0.065", "classical correlation strengths"},
        {"lambda", Kind::NumberList, "0.0947", "coherence strengths"},
        {"csv-dir", Kind::Path, "", "write one CSV per curve into this directory"},
        {"fail-on-forbidden", Kind::Flag, "false", "exit 1 when any final state is forbidden"}}},
  };
  return table;
}

const CommandSpec& find_spec(const std::string& name) {
  for (const auto& c : command_table()) {
    if (name == c.name) return c;
  }
  throw UsageError("unknown command '" + name + "'");
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> parts;
  if (text.empty()) return parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    parts.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return parts;
}

double to_number(const std::string& key, const std::string& text) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || errno == ERANGE || !std::isfinite(v)) {
    throw UsageError("--" + key + ": cannot parse number '" + text + "'");
  }
  return v;
}

std::vector<double> to_numbers(const std::string& key, const std::string& text) {
  std::vector<double> out;
  for (const auto& s : split(text)) out.push_back(to_number(key, s));
  return out;
}

std::vector<std::size_t> to_sizes(const std::string& key, const std::string& text) {
  std::vector<std::size_t> out;
  for (const auto& s : split(text)) {
    const double v = to_number(key, s);
    if (v < 1 || v != std::floor(v)) throw UsageError("--" + key + ": expected a positive integer, got '" + s + "'");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

std::vector<Alpha> to_grid(const std::string& key, const std::string& text) {
  if (text == "default") return default_alpha_grid();
  std::vector<Alpha> out;
  for (const auto& s : split(text)) {
    try {
      out.push_back(parse_alpha(s));
    } catch (const Error&) {
      throw UsageError("--" + key + ": cannot parse alpha '" + s + "'");
    }
  }
  if (out.empty()) throw UsageError("--" + key + ": empty grid");
  return out;
}

bool is_thermal_spec(const std::string& text) { return text.rfind("thermal:", 0) == 0; }

void check_value(const OptionSpec& o, const std::string& value) {
  const std::string key = o.name;
  switch (o.kind) {
    case Kind::Number: to_number(key, value); break;
    case Kind::NumberList: to_numbers(key, value); break;
    case Kind::SizeList: to_sizes(key, value); break;
    case Kind::AlphaList: to_grid(key, value); break;
    case Kind::OptDist:
      if (value.empty()) break;
      [[fallthrough]];
    case Kind::Dist:
      if (is_thermal_spec(value)) {
        to_number(key, value.substr(8));
      } else if (to_numbers(key, value).empty()) {
        throw UsageError("--" + key + ": empty distribution");
      }
      break;
    case Kind::Kinds:
      if (value != "both" && value != "distributed" && value != "concentrated") {
        throw UsageError("--" + key + ": expected both, distributed or concentrated");
      }
      break;
    case Kind::Flag:
      if (value != "true" && value != "false") throw UsageError("--" + key + ": expected true or false");
      break;
    case Kind::Path: break;
  }
}

std::string json_to_text(const std::string& key, const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number()) return format_short(v.get<double>());
  if (v.is_array()) {
    std::string out;
    for (const auto& e : v) {
      if (!out.empty()) out += ",";
      out += json_to_text(key, e);
    }
    return out;
  }
  throw UsageError("config key '" + key + "' has an unsupported value");
}

void merge_config(Command& cmd, const CommandSpec& spec, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!j.is_object()) throw UsageError("config file must hold a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const bool known = std::any_of(spec.options.begin(), spec.options.end(),
                                   [&](const OptionSpec& o) { return it.key() == o.name; });
    if (!known) throw UsageError("config file: unknown key '" + it.key() + "' for " + spec.name);
    if (cmd.explicit_keys.count(it.key())) continue;
    cmd.options[it.key()] = json_to_text(it.key(), it.value());
  }
}

// Typed views used by execute.
struct Args {
  const Command& cmd;
  const std::string& text(const std::string& k) const { return cmd.options.at(k); }
  double number(const std::string& k) const { return to_number(k, text(k)); }
  std::vector<double> numbers(const std::string& k) const { return to_numbers(k, text(k)); }
  bool flag(const std::string& k) const { return text(k) == "true"; }
  ProbDist dist(const std::string& k, const GibbsContext* ctx) const {
    const std::string& t = text(k);
    if (is_thermal_spec(t)) {
      if (ctx == nullptr) throw UsageError("--" + k + ": thermal:<beta> needs energy levels");
      const std::vector<double> e(ctx->energies().begin(), ctx->energies().end());
      return gibbs_dist(GibbsContext(e, to_number(k, t.substr(8))));
    }
    const auto w = to_numbers(k, t);
    return ProbDist::make(w);
  }
};

int run_divergence(const Args& a, std::ostream& out) {
  const ProbDist p = a.dist("p", nullptr);
  const ProbDist q = a.dist("q", nullptr);
  out << divergence_table_json(p, q, to_grid("grid", a.text("grid")));
  return kExitOk;
}

int run_scan(const Args& a, std::ostream& out) {
  const GibbsContext ctx(a.numbers("energies"), a.number("beta"));
  const ScanReport r =
      second_law_scan(a.dist("p", &ctx), a.dist("pp", &ctx), ctx, to_grid("grid", a.text("grid")), a.number("tol"));
  out << scan_report_json(r);
  return (!r.allowed && a.flag("fail-on-forbidden")) ? kExitForbidden : kExitOk;
}

int run_curve(const Args& a, std::ostream& out, std::ostream& err) {
  const GibbsContext ctx(a.numbers("energies"), a.number("beta"));
  const ProbDist g = a.text("g").empty() ? gibbs_dist(ctx) : a.dist("g", &ctx);
  const ProbDist p = a.dist("p", &ctx);
  out << curve_csv(thermo_curve(p, g));
  if (a.text("pp").empty()) return kExitOk;
  const Verdict v = thermal_feasible(p, a.dist("pp", &ctx), g);
  err << "verdict: " << verdict_label(v.allowed) << "\n";
  return (!v.allowed && a.flag("fail-on-forbidden")) ? kExitForbidden : kExitOk;
}

int run_sweep(const Args& a, std::ostream& out) {
  const GibbsContext ctx(a.numbers("energies"), a.number("beta"));
  std::vector<ProfileKind> kinds;
  const std::string& k = a.text("kind");
  if (k != "concentrated") kinds.push_back(ProfileKind::Distributed);
  if (k != "distributed") kinds.push_back(ProfileKind::Concentrated);
  const auto rows = catalysis_sweep(kinds, to_sizes("d", a.text("d")), a.numbers("eps"), a.numbers("alpha"),
                                    a.dist("p-sys", &ctx), a.dist("pp-sys", &ctx), ctx);
  out << sweep_csv(rows);
  return kExitOk;
}

std::string file_stem(const std::string& name) {
  std::string s;
  for (char c : name) {
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-') {
      s += c;
    } else if (c == '(' || c == '=') {
      s += '_';
    }
  }
  return s;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write '" + path.string() + "'");
  f << content;
  if (!f) throw IoError("failed writing '" + path.string() + "'");
}

int run_correlated(const Args& a, std::ostream& out) {
  ScenarioParams params;
  params.E_g = a.number("Eg");
  params.E_e = a.number("Ee");
  params.beta1 = a.number("beta1");
  params.beta2 = a.number("beta2");
  params.beta3 = a.number("beta3");
  params.beta_b = a.number("beta-b");
  const ScenarioReport r = scenario_report(params, a.numbers("chi"), a.numbers("lambda"));
  out << scenario_json(r);

  const std::string& dir = a.text("csv-dir");
  if (!dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create directory '" + dir + "': " + ec.message());
    const std::filesystem::path base(dir);
    write_file(base / "reference.csv", curve_csv(r.reference_curve));
    write_file(base / "initial.csv", curve_csv(r.initial_curve));
    for (const auto& s : r.states) write_file(base / (file_stem(s.name) + ".csv"), curve_csv(s.curve));
  }
  const bool any_forbidden =
      std::any_of(r.states.begin(), r.states.end(), [](const ScenarioState& s) { return !s.verdict.allowed; });
  return (any_forbidden && a.flag("fail-on-forbidden")) ? kExitForbidden : kExitOk;
}

}  // namespace

Command parse_command(const std::vector<std::string>& argv) {
  CLI::App app{"thermocat: generalized free energies, thermo-majorization and catalysis"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all", "show help for every command");

  struct Bound {
    const CommandSpec* spec;
    CLI::App* sub;
    std::map<std::string, std::string> values;
    std::map<std::string, bool> flags;
    std::string config;
  };
  std::vector<Bound> bound;
  bound.reserve(command_table().size());
  for (const auto& spec : command_table()) {
    bound.push_back(Bound{&spec, app.add_subcommand(spec.name, spec.help), {}, {}, {}});
    Bound& b = bound.back();
    for (const auto& o : spec.options) {
      const std::string flag = std::string("--") + o.name;
      if (o.kind == Kind::Flag) {
        b.flags[o.name] = false;
        b.sub->add_flag(flag, b.flags[o.name], o.help);
      } else {
        b.values[o.name] = o.default_value;
        b.sub->add_option(flag, b.values[o.name], o.help)->capture_default_str();
      }
    }
    b.sub->add_option("--config", b.config, "JSON file with option values; flags take precedence");
  }

  std::vector<std::string> args(argv.rbegin(), argv.rend());  // CLI11 consumes from the back
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    std::string what = e.what();
    if (argv.empty()) what = "missing command; expected one of divergence, scan, curve, catalysis-sweep, correlated-demo";
    throw UsageError(what);
  }

  for (auto& b : bound) {
    if (!b.sub->parsed()) continue;
    Command cmd{b.spec->name, {}, {}};
    for (const auto& o : b.spec->options) {
      const std::string flag = std::string("--") + o.name;
      if (b.sub->get_option(flag)->count() > 0) cmd.explicit_keys.insert(o.name);
      cmd.options[o.name] = o.kind == Kind::Flag ? (b.flags[o.name] ? "true" : "false") : b.values[o.name];
    }
    if (!b.config.empty()) merge_config(cmd, *b.spec, b.config);
    for (const auto& o : b.spec->options) check_value(o, cmd.options[o.name]);
    return cmd;
  }
  throw UsageError("missing command");
}

int execute(const Command& cmd, std::ostream& out, std::ostream& err) {
  find_spec(cmd.name);
  const Args a{cmd};
  if (cmd.name == "divergence") return run_divergence(a, out);
  if (cmd.name == "scan") return run_scan(a, out);
  if (cmd.name == "curve") return run_curve(a, out, err);
  if (cmd.name == "catalysis-sweep") return run_sweep(a, out);
  return run_correlated(a, out);
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  try {
    const Command cmd = parse_command(argv);
    return execute(cmd, out, err);
  } catch (const HelpRequested& h) {
    out << h.what();
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace thermocat::cli
