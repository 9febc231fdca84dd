#include "doctest.h"
#include "cli.hpp"
#include "opa/herald.hpp"
#include "opa/states.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace opa;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "opaherald");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("opa_cli_test_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  REQUIRE(f);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

json load(const fs::path& p) { return json::parse(slurp(p)); }

}  // namespace

TEST_CASE("herald of squeezed vacuum agrees with its closed form") {
  const fs::path dir = scratch("herald");
  const Run r = invoke({"herald", "--input", "sv", "--r", "1", "--g", "2.5", "--out", dir.string()});
  REQUIRE(r.code == 0);
  const json doc = load(dir / "herald.json");
  const json& run = doc["runs"][0];
  CHECK(run["F_vs_closed_form"].get<double>() >= 1.0 - 1e-7);

  const Cutoff k(doc["config"]["dim"].get<int>());
  const HeraldOutcome h = herald_single_photon(squeezed_vacuum(SqueezeParam(1.0), k).normalized(), GainParam(2.5));
  CHECK(run["success_probability"].get<double>() == doctest::Approx(h.success_probability).epsilon(1e-11));
  CHECK(run["amplitudes"]["re"].size() == static_cast<std::size_t>(k.dim()));
  CHECK(json::parse(r.out)["written"][0].get<std::string>() == (dir / "herald.json").string());
}

TEST_CASE("unit gain passes the input through") {
  const fs::path dir = scratch("passthrough");
  REQUIRE(invoke({"herald", "--r", "0.7", "--theta", "0.4", "--g", "1", "--out", dir.string()}).code == 0);
  const json doc = load(dir / "herald.json");
  const Cutoff k(doc["config"]["dim"].get<int>());
  const StateVector in = squeezed_vacuum(SqueezeParam(0.7, 0.4), k).normalized();
  const json& amps = doc["runs"][0]["amplitudes"];
  double worst = 0.0;
  for (int n = 0; n < k.dim(); ++n)
    worst = std::max(worst, std::abs(cplx(amps["re"][n].get<double>(), amps["im"][n].get<double>()) - in(n)));
  CHECK(worst < 1e-11);
  CHECK(doc["runs"][0]["success_probability"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("critical gain is resolved and recorded") {
  const fs::path dir = scratch("critical");
  REQUIRE(invoke({"herald", "--input", "cat-even", "--alpha", "1.01", "--g", "critical", "--out", dir.string()}).code == 0);
  const json doc = load(dir / "herald.json");
  const double g0 = doc["config"]["g"][0].get<double>();
  CHECK(g0 == doctest::Approx(7.124).epsilon(1e-4));
  CHECK(1.01 / g0 == doctest::Approx(0.142).epsilon(0.005));
  CHECK(doc["runs"][0]["F_vs_closed_form"].get<double>() >= 1.0 - 1e-7);

  // Fock inputs have no closed form to compare against.
  REQUIRE(invoke({"herald", "--input", "fock", "--n", "2", "--g", "1.5", "--out", dir.string()}).code == 0);
  CHECK(load(dir / "herald.json")["runs"][0]["F_vs_closed_form"].is_null());
}

TEST_CASE("errors map to exit codes with a JSON report") {
  const fs::path dir = scratch("errors");
  fs::create_directories(dir);
  {
    std::ofstream f(dir / "bad.json");
    f << R"({"input": "sv", "gain": 2})";
  }
  Run r = invoke({"herald", "--config", (dir / "bad.json").string()});
  CHECK(r.code == 2);
  CHECK(json::parse(r.err)["error"]["kind"] == "config");

  CHECK(invoke({"herald", "--input", "squeezed"}).code == 2);
  CHECK(invoke({"herald", "--dim", "lots"}).code == 2);
  CHECK(invoke({"herald", "--g", "critical"}).code == 2);
  CHECK(invoke({"wigner", "--window", "-1,1,-1,1,32"}).code == 2);
  CHECK(invoke({"loss", "--kappa-t", "0.5", "--kappa-t", "0.1"}).code == 2);
  CHECK(invoke({"sweep", "--input", "fock"}).code == 2);
  CHECK(invoke({"herald", "--no-such-flag"}).code == 2);
  CHECK(invoke({}).code == 2);

  r = invoke({"herald", "--input", "fock", "--n", "9", "--dim", "4"});
  CHECK(r.code == 2);
  CHECK(json::parse(r.err)["error"]["kind"] == "dimension");

  r = invoke({"herald", "--r", "4"});
  CHECK(r.code == 3);
  CHECK(json::parse(r.err)["error"]["kind"] == "truncation");

  r = invoke({"loss", "--window", "-1,1,-1,1,32,32", "--out", dir.string()});
  CHECK(r.code == 3);
  CHECK(json::parse(r.err)["error"]["kind"] == "truncation");

  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("config files are strict") {
  CHECK_THROWS_AS(cli::config_from_json(json{{"r", "one"}}), ConfigError);
  CHECK_THROWS_AS(cli::config_from_json(json{{"window", 6}}), ConfigError);
  CHECK_THROWS_AS(cli::config_from_json(json::array()), ConfigError);
  CHECK_THROWS_AS(cli::config_from_json(json{{"config", {{"r", 1}}}, {"extra", 1}}), ConfigError);
  const cli::ExperimentConfig c = cli::config_from_json(json{{"g", {1.5, "critical"}}, {"dim", 64}, {"kappa_t", 0.3}});
  CHECK(c.g == std::vector<std::string>{"1.5", "critical"});
  CHECK(c.dim == "64");
  CHECK(c.kappa_t == std::vector<double>{0.3});
}

TEST_CASE("flags override the config file") {
  const fs::path dir = scratch("override");
  fs::create_directories(dir);
  {
    std::ofstream f(dir / "in.json");
    f << R"({"input": "sv", "r": 0.5, "g": [1.5], "format": "json"})";
  }
  REQUIRE(invoke({"herald", "--config", (dir / "in.json").string(), "--r", "0.8", "--out", dir.string()}).code == 0);
  const json cfg = load(dir / "herald.json")["config"];
  CHECK(cfg["r"].get<double>() == 0.8);
  CHECK(cfg["g"][0].get<double>() == 1.5);
}

TEST_CASE("outputs are deterministic and re-runnable from their metadata") {
  const fs::path a = scratch("det_a"), b = scratch("det_b"), c = scratch("det_c");
  const std::vector<std::string> args = {"wigner", "--input", "cat-odd", "--alpha", "1.5", "--g", "critical"};
  auto with_out = [&](const fs::path& p) {
    std::vector<std::string> v = args;
    v.insert(v.end(), {"--out", p.string()});
    return v;
  };
  REQUIRE(invoke(with_out(a)).code == 0);
  REQUIRE(invoke(with_out(b)).code == 0);
  CHECK(slurp(a / "wigner.csv") == slurp(b / "wigner.csv"));

  // Apart from the output directory the metadata match too, and the recorded
  // config names the cutoff, window and gain explicitly.
  const json meta = load(a / "wigner.meta.json");
  json other = load(b / "wigner.meta.json");
  other["config"]["out"] = meta["config"]["out"];
  CHECK(other.dump() == meta.dump());
  CHECK(meta["config"]["dim"].is_number_integer());
  CHECK(meta["config"]["window"].get<std::string>() != "auto");
  CHECK(meta["config"]["g"][0].is_number());
  CHECK(meta["diagnostics"]["N"].get<double>() > 0.0);

  REQUIRE(invoke({"wigner", "--config", (a / "wigner.meta.json").string(), "--out", c.string()}).code == 0);
  CHECK(slurp(a / "wigner.csv") == slurp(c / "wigner.csv"));
  json again = load(c / "wigner.meta.json");
  again["config"].erase("out");
  json first = meta;
  first["config"].erase("out");
  CHECK(again == first);

  const fs::path s1 = scratch("det_s1"), s2 = scratch("det_s2");
  const std::vector<std::string> sweep = {"sweep", "--input", "sv", "--g", "1.5", "--g", "2.5",
                                          "--param", "0.5", "--param", "1"};
  std::vector<std::string> v1 = sweep, v2 = sweep;
  v1.insert(v1.end(), {"--out", s1.string()});
  v2.insert(v2.end(), {"--out", s2.string()});
  REQUIRE(invoke(v1).code == 0);
  REQUIRE(invoke(v2).code == 0);
  CHECK(slurp(s1 / "sweep.csv") == slurp(s2 / "sweep.csv"));
  CHECK(slurp(s1 / "sweep.csv").rfind("param,g,N,p_success\n", 0) == 0);
}

TEST_CASE("table1 writes one row per gain") {
  const fs::path dir = scratch("table1");
  REQUIRE(invoke({"table1", "--out", dir.string()}).code == 0);
  std::istringstream csv(slurp(dir / "table1.csv"));
  std::string line;
  std::getline(csv, line);
  CHECK(line == "g,gamma,alpha,F");
  std::vector<std::vector<double>> rows;
  while (std::getline(csv, line)) {
    std::vector<double> row;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    REQUIRE(row.size() == 4);
    rows.push_back(row);
  }
  REQUIRE(rows.size() == 6);
  CHECK(rows[0][0] == 1.0);
  CHECK(rows[0][2] <= 0.02);
  CHECK(rows[0][3] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::abs(rows[4][2] - rows[5][2]) <= 0.01);
  for (const auto& r : rows) CHECK(r[3] >= 0.997);
  CHECK(invoke({"table1", "--input", "coherent", "--out", dir.string()}).code == 2);
}

TEST_CASE("loss and targets commands") {
  const fs::path dir = scratch("loss");
  REQUIRE(invoke({"loss", "--r", "1", "--g", "2.5", "--out", dir.string()}).code == 0);
  CHECK(slurp(dir / "loss.csv").rfind("kappa_t,N\n0.1,", 0) == 0);
  const json states = load(dir / "loss_states.json")["states"];
  REQUIRE(states.size() == 3);
  CHECK(states[2]["kappa_t"].get<double>() == 1.0);
  CHECK(states[0]["real"].size() == states[0]["dim"].get<std::size_t>());

  REQUIRE(invoke({"targets", "--input", "cat-even", "--alpha", "1.01", "--out", dir.string()}).code == 0);
  std::istringstream csv(slurp(dir / "targets.csv"));
  std::string header, row;
  std::getline(csv, header);
  std::getline(csv, row);
  CHECK(header == "g,target,F,r_opt");
  CHECK(row.find("|0>-1.416|2>") != std::string::npos);
  const double f = std::stod(row.substr(row.find("|2>,") + 4));
  CHECK(f > 0.999);
}
