#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "opa/fidelity.hpp"
#include "opa/format.hpp"
#include "opa/loss.hpp"
#include "opa/wigner.hpp"

namespace opa::cli {

namespace fs = std::filesystem;
using nlohmann::json;

// ---------------------------------------------------------------- config

namespace {

const std::vector<std::string> kConfigKeys = {"input", "r", "theta", "alpha", "n", "g", "dim", "window",
                                              "points", "kappa_t", "params", "out", "format"};

template <class T>
T typed(const json& j, const std::string& key) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw ConfigError("config key '" + key + "' has the wrong type");
  }
}

std::string number_or_string(const json& v, const std::string& key) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number()) return fmt12(v.get<double>());
  throw ConfigError("config key '" + key + "' must be a number or a string");
}

std::vector<double> number_list(const json& v, const std::string& key) {
  if (v.is_number()) return {v.get<double>()};
  if (!v.is_array()) throw ConfigError("config key '" + key + "' must be a number or a list of numbers");
  std::vector<double> out;
  for (const auto& e : v) {
    if (!e.is_number()) throw ConfigError("config key '" + key + "' must hold numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

}  // namespace

ExperimentConfig config_from_json(const json& doc) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  const json* j = &doc;
  if (doc.contains("config") && doc["config"].is_object()) {
    for (const auto& [k, v] : doc.items())
      if (k != "config" && k != "command" && k != "diagnostics")
        throw ConfigError("unknown metadata key '" + k + "'");
    j = &doc["config"];
  }
  ExperimentConfig c;
  for (const auto& [key, v] : j->items()) {
    if (std::find(kConfigKeys.begin(), kConfigKeys.end(), key) == kConfigKeys.end())
      throw ConfigError("unknown config key '" + key + "'");
    if (key == "input") c.input = typed<std::string>(v, key);
    else if (key == "r") c.r = typed<double>(v, key);
    else if (key == "theta") c.theta = typed<double>(v, key);
    else if (key == "alpha") c.alpha = typed<double>(v, key);
    else if (key == "n") c.n = typed<int>(v, key);
    else if (key == "points") c.points = typed<int>(v, key);
    else if (key == "g") {
      c.g.clear();
      if (v.is_array())
        for (const auto& e : v) c.g.push_back(number_or_string(e, key));
      else
        c.g.push_back(number_or_string(v, key));
    } else if (key == "dim") c.dim = number_or_string(v, key);
    else if (key == "window") c.window = typed<std::string>(v, key);
    else if (key == "kappa_t") c.kappa_t = number_list(v, key);
    else if (key == "params") c.params = number_list(v, key);
    else if (key == "out") c.out = typed<std::string>(v, key);
    else if (key == "format") c.format = typed<std::string>(v, key);
  }
  return c;
}

json config_to_json(const ExperimentConfig& c) {
  json g = json::array();
  for (const auto& t : c.g) {
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end && *end == '\0' && !t.empty()) g.push_back(sig12(v));
    else g.push_back(t);
  }
  json kt = json::array(), params = json::array();
  for (double v : c.kappa_t) kt.push_back(sig12(v));
  for (double v : c.params) params.push_back(sig12(v));
  json j = {{"input", c.input}, {"r", sig12(c.r)},   {"theta", sig12(c.theta)}, {"alpha", sig12(c.alpha)},
            {"n", c.n},         {"g", g},            {"window", c.window},      {"points", c.points},
            {"kappa_t", kt},    {"params", params},  {"out", c.out},            {"format", c.format}};
  char* end = nullptr;
  const long d = std::strtol(c.dim.c_str(), &end, 10);
  if (end && *end == '\0' && !c.dim.empty()) j["dim"] = d;
  else j["dim"] = c.dim;
  return j;
}

// ---------------------------------------------------------------- helpers

namespace {

bool has_alpha(const std::string& input) { return input == "coherent" || input == "cat-even" || input == "cat-odd"; }

void validate(const ExperimentConfig& c) {
  static const std::vector<std::string> inputs = {"sv", "coherent", "cat-even", "cat-odd", "fock"};
  if (std::find(inputs.begin(), inputs.end(), c.input) == inputs.end())
    throw ConfigError("unknown input '" + c.input + "'");
  if (!c.format.empty() && c.format != "csv" && c.format != "json")
    throw ConfigError("format must be csv or json");
  if (c.points < 16) throw ConfigError("points must be at least 16");
  if (c.input == "fock" && c.n < 0) throw ConfigError("Fock level must be >= 0");
}

StateVector make_input(const ExperimentConfig& c, Cutoff k) {
  if (c.input == "sv") return squeezed_vacuum(SqueezeParam(c.r, c.theta), k);
  if (c.input == "coherent") return coherent(c.alpha, k);
  if (c.input == "cat-even") return cat(CatSpec(c.alpha, Parity::even), k);
  if (c.input == "cat-odd") return cat(CatSpec(c.alpha, Parity::odd), k);
  if (c.n >= k.dim()) throw DimensionError("Fock level outside the cutoff");
  return fock(c.n, k);
}

// Resolves the cutoff and rewrites the config so it names it explicitly.
StateVector resolve_input(ExperimentConfig& c) {
  Cutoff k(2);
  if (c.dim == "auto") {
    k = auto_cutoff([&](Cutoff t) { return make_input(c, t); });
  } else {
    std::size_t used = 0;
    int d = 0;
    try {
      d = std::stoi(c.dim, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != c.dim.size() || used == 0) throw ConfigError("dim must be 'auto' or an integer");
    k = Cutoff(d);
  }
  c.dim = std::to_string(k.dim());
  return make_input(c, k).normalized();
}

// Gains as numbers; "critical" needs an amplitude above one.
std::vector<GainParam> resolve_gains(ExperimentConfig& c, const std::vector<std::string>& defaults) {
  if (c.g.empty()) c.g = defaults;
  std::vector<GainParam> out;
  std::vector<std::string> resolved;
  for (const std::string& t : c.g) {
    double g = 0.0;
    if (t == "critical") {
      if (!has_alpha(c.input)) throw ConfigError("critical gain needs a coherent or cat input");
      g = sig12(critical_gain(c.alpha).g());
    } else {
      std::size_t used = 0;
      try {
        g = std::stod(t, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != t.size() || used == 0) throw ConfigError("gain must be a number or 'critical', got '" + t + "'");
    }
    out.emplace_back(g);
    resolved.push_back(fmt12(g));
  }
  c.g = resolved;
  return out;
}

std::optional<PhaseSpaceWindow> parse_window(const ExperimentConfig& c) {
  if (c.window == "auto") return std::nullopt;
  std::vector<double> v;
  std::stringstream ss(c.window);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw ConfigError("window entries must be numbers");
    v.push_back(x);
  }
  if (v.size() != 6) throw ConfigError("window must be 'auto' or xmin,xmax,pmin,pmax,nx,np");
  if (v[4] != std::floor(v[4]) || v[5] != std::floor(v[5])) throw ConfigError("window point counts must be integers");
  PhaseSpaceWindow w{v[0], v[1], v[2], v[3], static_cast<int>(v[4]), static_cast<int>(v[5])};
  w.validate();
  return w;
}

// Bounds rounded to the printed precision, so the recorded window reproduces the grid.
PhaseSpaceWindow rounded(PhaseSpaceWindow w) {
  w.x_min = sig12(w.x_min);
  w.x_max = sig12(w.x_max);
  w.p_min = sig12(w.p_min);
  w.p_max = sig12(w.p_max);
  return w;
}

std::string window_string(const PhaseSpaceWindow& w) {
  return fmt12(w.x_min) + "," + fmt12(w.x_max) + "," + fmt12(w.p_min) + "," + fmt12(w.p_max) + "," +
         std::to_string(w.nx) + "," + std::to_string(w.np);
}

// Explicit window, or the automatic one (grown until the edge is clear) fixed in the config.
PhaseSpaceWindow resolve_window(ExperimentConfig& c, const DensityMatrix& rho) {
  if (auto w = parse_window(c)) return *w;
  const PhaseSpaceWindow w = rounded(auto_wigner(rho, c.points).window);
  c.window = window_string(w);
  return w;
}

json amplitudes_json(const StateVector& s) {
  json re = json::array(), im = json::array();
  for (int n = 0; n < s.dim(); ++n) {
    re.push_back(sig12(s(n).real()));
    im.push_back(sig12(s(n).imag()));
  }
  return {{"re", re}, {"im", im}};
}

json num_or_null(double v) { return std::isfinite(v) ? json(sig12(v)) : json(nullptr); }

class Writer {
 public:
  Writer(const ExperimentConfig& c, std::string command) : dir_(c.out), command_(std::move(command)) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw ConfigError("cannot create output directory '" + dir_.string() + "'");
  }

  void text(const std::string& name, const std::string& body) {
    const fs::path p = dir_ / name;
    std::ofstream f(p, std::ios::binary);
    if (!f) throw ConfigError("cannot write '" + p.string() + "'");
    f << body;
    written_.push_back(p.string());
  }
  void document(const std::string& name, const json& j) { text(name, j.dump(2) + "\n"); }
  void meta(const ExperimentConfig& c, const json& diagnostics) {
    document(command_ + ".meta.json", {{"command", command_}, {"config", config_to_json(c)}, {"diagnostics", diagnostics}});
  }
  const std::vector<std::string>& written() const { return written_; }

 private:
  fs::path dir_;
  std::string command_;
  std::vector<std::string> written_;
};

std::string format_or(const ExperimentConfig& c, const std::string& fallback) {
  return c.format.empty() ? fallback : c.format;
}

// ---------------------------------------------------------------- commands

std::optional<StateVector> closed_form_output(const ExperimentConfig& c, const GainParam& gain, Cutoff k) {
  if (c.input == "sv") return sv_output_closed_form(c.r, c.theta, gain, k).second;
  if (c.input == "coherent") return coherent_output_closed_form(c.alpha, gain, k);
  if (c.input == "cat-even") return cat_output_closed_form(CatSpec(c.alpha, Parity::even), gain, k);
  if (c.input == "cat-odd") return cat_output_closed_form(CatSpec(c.alpha, Parity::odd), gain, k);
  return std::nullopt;
}

void cmd_herald(ExperimentConfig c, Writer& w) {
  const StateVector in = resolve_input(c);
  const std::vector<GainParam> gains = resolve_gains(c, {"2.5"});
  const std::string format = format_or(c, "json");
  c.format = format;
  json runs = json::array();
  std::ostringstream csv;
  csv << "g,p_success,F_vs_closed_form\n";
  for (const GainParam& gain : gains) {
    const HeraldOutcome h = herald_single_photon(in, gain);
    double f = std::nan("");
    if (auto closed = closed_form_output(c, gain, in.cutoff())) f = fidelity(h.state, *closed);
    runs.push_back({{"g", sig12(gain.g())},
                    {"success_probability", sig12(h.success_probability)},
                    {"F_vs_closed_form", num_or_null(f)},
                    {"tail_population", sig12(h.state.tail_population())},
                    {"amplitudes", amplitudes_json(h.state)}});
    csv << fmt12(gain.g()) << ',' << fmt12(h.success_probability) << ',' << (std::isfinite(f) ? fmt12(f) : "") << '\n';
  }
  if (format == "json") {
    w.document("herald.json", {{"command", "herald"}, {"config", config_to_json(c)}, {"runs", runs}});
  } else {
    w.text("herald.csv", csv.str());
    w.meta(c, {{"runs", runs}});
  }
}

void cmd_table1(ExperimentConfig c, Writer& w) {
  if (c.input != "sv") throw ConfigError("table1 fits heralded squeezed vacuum; use --input sv");
  const std::vector<GainParam> gains = resolve_gains(c, {"1", "1.5", "2.5", "5", "7.5", "10"});
  AutoCutoffPolicy policy;
  if (c.dim != "auto") {
    const StateVector fixed = resolve_input(c);
    policy.min_dim = policy.max_dim = fixed.dim();
    policy.tail_tol = 1.0;
  }
  std::vector<double> g;
  for (const auto& k : gains) g.push_back(k.g());
  const std::vector<FitRow> rows = cat_fit_table(c.r, g, policy);
  c.dim = std::to_string(rows.front().dim);
  const std::string format = format_or(c, "csv");
  c.format = format;
  json jr = json::array();
  for (const auto& r : rows)
    jr.push_back({{"g", sig12(r.g)},
                  {"gamma", sig12(r.fit.gamma_opt)},
                  {"alpha", sig12(r.fit.alpha_opt)},
                  {"F", sig12(r.fit.fidelity)},
                  {"evaluations", r.fit.evaluations},
                  {"converged", r.fit.converged},
                  {"success_probability", sig12(r.success_probability)}});
  if (format == "csv") {
    std::ostringstream os;
    write_fit_csv(os, rows);
    w.text("table1.csv", os.str());
    w.meta(c, {{"rows", jr}});
  } else {
    w.document("table1.json", {{"command", "table1"}, {"config", config_to_json(c)}, {"rows", jr}});
  }
}

// The input itself, or its heralded output when a single gain is given.
StateVector source_state(ExperimentConfig& c, json& diag) {
  const StateVector in = resolve_input(c);
  if (c.g.empty()) return in;
  const std::vector<GainParam> gains = resolve_gains(c, {});
  if (gains.size() != 1) throw ConfigError("this command takes at most one gain");
  const HeraldOutcome h = herald_single_photon(in, gains[0]);
  diag["success_probability"] = sig12(h.success_probability);
  return h.state;
}

void cmd_wigner(ExperimentConfig c, Writer& w) {
  json diag = json::object();
  const StateVector s = source_state(c, diag);
  const DensityMatrix rho = DensityMatrix::pure(s);
  const PhaseSpaceWindow win = resolve_window(c, rho);
  const WignerGrid grid = wigner_of_state(rho, win);
  diag["boundary_max"] = sig12(grid.boundary_max());
  diag["integral"] = sig12(grid.integral());
  diag["N"] = grid.boundary_max() < kBoundaryTolerance ? json(sig12(negativity_volume(grid))) : json(nullptr);
  const std::string format = format_or(c, "csv");
  c.format = format;
  if (format == "csv") {
    std::ostringstream os;
    write_grid_csv(os, grid);
    w.text("wigner.csv", os.str());
    w.meta(c, diag);
  } else {
    json j = grid_to_json(grid);
    j["command"] = "wigner";
    j["config"] = config_to_json(c);
    j["diagnostics"] = diag;
    w.document("wigner.json", j);
  }
}

void cmd_sweep(ExperimentConfig c, Writer& w) {
  if (!c.window.empty() && c.window != "auto") throw ConfigError("sweeps size each window automatically");
  if (c.dim != "auto") throw ConfigError("sweeps choose each cutoff automatically");
  const InputFamily family = c.input == "sv" ? InputFamily::sv : c.input == "cat-even" ? InputFamily::even_cat
                             : c.input == "cat-odd"                ? InputFamily::odd_cat
                                                                   : throw ConfigError("sweeps take sv, cat-even or cat-odd");
  if (c.params.empty())
    for (int k = 0; k <= 15; ++k) c.params.push_back(family == InputFamily::sv ? 0.1 * k : 0.5 + 0.1 * k);
  for (const auto& t : c.g)
    if (t == "critical") throw ConfigError("sweeps take numeric gains");
  const std::vector<GainParam> gains = resolve_gains(c, {"1", "1.5", "2.5", "5"});
  std::vector<double> g;
  for (const auto& k : gains) g.push_back(k.g());
  SweepOptions opt;
  opt.points = c.points;
  const std::vector<NegativityRow> rows = negativity_sweep(family, c.params, g, opt);
  json jr = json::array();
  for (const auto& r : rows)
    jr.push_back({{"param", sig12(r.param)},
                  {"g", sig12(r.g)},
                  {"N", sig12(r.N)},
                  {"p_success", sig12(r.success_probability)},
                  {"dim", r.dim},
                  {"window", window_to_json(r.window)}});
  const std::string format = format_or(c, "csv");
  c.format = format;
  if (format == "csv") {
    std::ostringstream os;
    write_sweep_csv(os, rows);
    w.text("sweep.csv", os.str());
    w.meta(c, {{"rows", jr}});
  } else {
    w.document("sweep.json", {{"command", "sweep"}, {"config", config_to_json(c)}, {"rows", jr}});
  }
}

void cmd_loss(ExperimentConfig c, Writer& w) {
  json diag = json::object();
  const StateVector s = source_state(c, diag);
  if (c.kappa_t.empty()) c.kappa_t = {0.1, 0.5, 1.0};
  const LossSchedule schedule(c.kappa_t);
  const PhaseSpaceWindow win = resolve_window(c, DensityMatrix::pure(s));
  const std::vector<DensityMatrix> snaps = evolve_loss(s, schedule);
  json rows = json::array(), states = json::array();
  std::ostringstream csv;
  csv << "kappa_t,N\n";
  for (std::size_t i = 0; i < snaps.size(); ++i) {
    const double kt = schedule.points()[i];
    const double n = negativity_volume(wigner_of_state(snaps[i], win));
    rows.push_back({{"kappa_t", sig12(kt)},
                    {"N", sig12(n)},
                    {"trace", sig12(snaps[i].trace())},
                    {"mean_photon", sig12(snaps[i].mean_photon())}});
    states.push_back(density_to_json(snaps[i], kt));
    csv << fmt12(kt) << ',' << fmt12(n) << '\n';
  }
  const std::string format = format_or(c, "csv");
  c.format = format;
  if (format == "csv") {
    w.text("loss.csv", csv.str());
    diag["rows"] = rows;
    w.meta(c, diag);
    w.document("loss_states.json", {{"command", "loss"}, {"config", config_to_json(c)}, {"states", states}});
  } else {
    w.document("loss.json",
               {{"command", "loss"}, {"config", config_to_json(c)}, {"diagnostics", diag}, {"rows", rows}, {"states", states}});
  }
}

void cmd_targets(ExperimentConfig c, Writer& w) {
  const StateVector in = resolve_input(c);
  const std::vector<GainParam> gains = resolve_gains(c, {has_alpha(c.input) ? "critical" : "1"});
  json rows = json::array();
  std::ostringstream csv;
  csv << "g,target,F,r_opt\n";
  for (const GainParam& gain : gains) {
    const HeraldOutcome h = herald_single_photon(in, gain);
    for (const TargetFit& t : fit_named_targets(h.state)) {
      rows.push_back({{"g", sig12(gain.g())}, {"target", t.name}, {"F", sig12(t.fidelity)}, {"r_opt", num_or_null(t.r_opt)}});
      csv << fmt12(gain.g()) << ',' << t.name << ',' << fmt12(t.fidelity) << ','
          << (std::isfinite(t.r_opt) ? fmt12(t.r_opt) : "") << '\n';
    }
  }
  const std::string format = format_or(c, "csv");
  c.format = format;
  if (format == "csv") {
    w.text("targets.csv", csv.str());
    w.meta(c, {{"rows", rows}});
  } else {
    w.document("targets.json", {{"command", "targets"}, {"config", config_to_json(c)}, {"rows", rows}});
  }
}

void report_error(std::ostream& err, const std::string& kind, const std::string& message) {
  err << json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << '\n';
}

}  // namespace

// ---------------------------------------------------------------- entry

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Heralded non-Gaussian state generation from a single-photon-seeded parametric amplifier"};
  app.require_subcommand(1);

  struct Flags {
    std::string config, input, dim, window, out, format;
    double r = 0, theta = 0, alpha = 0;
    int n = 0, points = 0;
    std::vector<std::string> g;
    std::vector<double> kappa_t, params;
  } f;

  using Command = std::function<void(ExperimentConfig, Writer&)>;
  const std::vector<std::tuple<std::string, std::string, Command>> commands = {
      {"herald", "herald one input at one or more gains", cmd_herald},
      {"table1", "fit heralded squeezed vacuum with squeezed even cats", cmd_table1},
      {"wigner", "Wigner grid of an input or its heralded output", cmd_wigner},
      {"sweep", "negativity volume over input parameters and gains", cmd_sweep},
      {"loss", "photon-loss snapshots and their negativity", cmd_loss},
      {"targets", "fidelities against the named target states", cmd_targets},
  };
  std::map<std::string, CLI::App*> subs;
  std::vector<std::pair<std::string, CLI::Option*>> opts;
  for (const auto& [name, help, fn] : commands) {
    CLI::App* s = app.add_subcommand(name, help);
    subs[name] = s;
    auto add = [&](const std::string& key, CLI::Option* o) { opts.emplace_back(name + key, o); };
    add("config", s->add_option("--config", f.config, "JSON config file; flags override it"));
    add("input", s->add_option("--input", f.input, "sv | coherent | cat-even | cat-odd | fock"));
    add("r", s->add_option("--r", f.r, "squeezing magnitude of the sv input"));
    add("theta", s->add_option("--theta", f.theta, "squeezing phase of the sv input"));
    add("alpha", s->add_option("--alpha", f.alpha, "coherent or cat amplitude"));
    add("n", s->add_option("--n", f.n, "Fock level of the fock input"));
    add("g", s->add_option("--g", f.g, "gain, repeatable; a number or 'critical'"));
    add("dim", s->add_option("--dim", f.dim, "auto | N"));
    add("window", s->add_option("--window", f.window, "auto | xmin,xmax,pmin,pmax,nx,np"));
    add("points", s->add_option("--points", f.points, "grid points per axis for automatic windows"));
    add("kappa_t", s->add_option("--kappa-t", f.kappa_t, "loss snapshot, repeatable"));
    add("params", s->add_option("--param", f.params, "sweep parameter, repeatable"));
    add("out", s->add_option("--out", f.out, "output directory"));
    add("format", s->add_option("--format", f.format, "csv | json"));
  }

  std::vector<std::string> rev(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rev.begin(), rev.end());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    report_error(err, "config", e.what());
    return 2;
  }

  try {
    for (const auto& [name, help, fn] : commands) {
      if (!subs[name]->parsed()) continue;
      auto given = [&](const std::string& key) {
        for (const auto& [k, o] : opts)
          if (k == name + key) return o->count() > 0;
        return false;
      };
      ExperimentConfig c;
      if (given("config")) {
        std::ifstream in(f.config);
        if (!in) throw ConfigError("cannot read config file '" + f.config + "'");
        json j;
        try {
          j = json::parse(in);
        } catch (const json::exception& e) {
          throw ConfigError(std::string("config file is not valid JSON: ") + e.what());
        }
        c = config_from_json(j);
      }
      if (given("input")) c.input = f.input;
      if (given("r")) c.r = f.r;
      if (given("theta")) c.theta = f.theta;
      if (given("alpha")) c.alpha = f.alpha;
      if (given("n")) c.n = f.n;
      if (given("g")) c.g = f.g;
      if (given("dim")) c.dim = f.dim;
      if (given("window")) c.window = f.window;
      if (given("points")) c.points = f.points;
      if (given("kappa_t")) c.kappa_t = f.kappa_t;
      if (given("params")) c.params = f.params;
      if (given("out")) c.out = f.out;
      if (given("format")) c.format = f.format;
      validate(c);
      Writer w(c, name);
      fn(c, w);
      out << json{{"command", name}, {"written", w.written()}}.dump() << '\n';
      return 0;
    }
  } catch (const Error& e) {
    report_error(err, e.kind(), e.what());
    return e.exit_code();
  } catch (const std::exception& e) {
    report_error(err, "numerical", e.what());
    return 3;
  }
  return 0;
}

}  // namespace opa::cli
