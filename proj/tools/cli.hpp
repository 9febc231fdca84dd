#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace opa::cli {

// Everything a run needs. Loaded from a JSON file, then overridden by flags.
struct ExperimentConfig {
  std::string input = "sv";  // sv | coherent | cat-even | cat-odd | fock
  double r = 1.0;
  double theta = 0.0;
  double alpha = 1.0;
  int n = 1;                     // Fock level for --input fock
  std::vector<std::string> g;    // numbers or "critical"; empty: command default
  std::string dim = "auto";      // auto | N
  std::string window = "auto";   // auto | xmin,xmax,pmin,pmax,nx,np
  int points = 201;              // grid points per axis for automatic windows
  std::vector<double> kappa_t;
  std::vector<double> params;    // sweep parameters (r or alpha)
  std::string out = ".";
  std::string format;            // csv | json; empty: command default
};

// Strict reader: unknown keys and wrong types raise ConfigError. A metadata
// file written by a previous run is accepted too (its "config" entry is used).
ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ExperimentConfig& c);

// Full command line, program name first. Returns the process exit code:
// 0 success, 2 configuration or domain error, 3 numerical or truncation error.
// Errors are reported on err as one JSON object.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace opa::cli
