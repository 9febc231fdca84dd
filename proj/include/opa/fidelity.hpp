#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "opa/herald.hpp"

namespace opa {

// |<a|b>|^2 of the renormalized states.
double fidelity(const StateVector& a, const StateVector& b);

struct ClosedFormFidelity {
  double value;
  // The expression needs c0 != 0 and a real (signed) composite squeeze;
  // otherwise the value comes from the numeric overlap.
  bool numeric_fallback;
};

// Fidelity of S(xi'')[c0|0> + c2|2>] against the squeezed even cat
// S(gamma)(|alpha> + |-alpha>), with nu = e^{-(r'' - gamma)}, mu = c2/c0:
//   F = 4 nu e^{-2 alpha^2/(1+nu^2)} / (1+nu^2)
//       |chi N (sqrt 2 + mu* (1 - nu^4 + 4 nu^2 alpha^2)/(1+nu^2)^2)|^2.
ClosedFormFidelity fidelity_closed_form(const SvOutputForm& form, double gamma, double alpha);

// Fidelity against the normalized target S(gamma)(|alpha> +- |-alpha>),
// evaluated as |<cat| S(-gamma) |psi>|^2 so the result is exact whenever the
// state and the unsqueezed cat fit the cutoff (the squeezed target need not).
double cat_target_fidelity(const StateVector& psi, double gamma, double alpha, Parity parity);

struct FitResult {
  double gamma_opt = 0.0;
  double alpha_opt = 0.0;
  double fidelity = 0.0;
  int evaluations = 0;
  bool converged = false;
};

struct FitOptions {
  double gamma_min = 0.0, gamma_max = 2.0;
  double alpha_min = 0.0, alpha_max = 3.0;
  int grid = 5;             // multistart grid per axis
  double simplex_tol = 1e-6;
  int max_evaluations = 4000;  // per start
  int threads = 0;
};

// Nelder-Mead over (gamma, alpha) in the box from a grid of starts. Best
// fidelity wins; near-ties go to the smaller gamma, then the smaller alpha.
FitResult optimize_cat_fit(const StateVector& output, Parity parity, const FitOptions& options = {});

// A named comparison state: a fixed Fock superposition, or S(r)|n> with r
// optimized on [r_min, r_max].
struct NamedTarget {
  std::string name;
  std::vector<std::pair<int, cplx>> superposition;  // used when squeezed_level < 0
  int squeezed_level = -1;
  double r_min = -1.0, r_max = 1.0;
};

struct TargetFit {
  std::string name;
  double fidelity;
  double r_opt;  // NaN for fixed targets
};

std::vector<NamedTarget> default_targets();
std::vector<TargetFit> fit_named_targets(const StateVector& output,
                                         const std::vector<NamedTarget>& catalog = default_targets());

struct FitRow {
  double g;
  FitResult fit;
  double success_probability;
  int dim;
};

// Herald a squeezed vacuum S(r)|0> at each gain and fit the output with a
// squeezed even cat: the rows of the optimized-parameter table.
std::vector<FitRow> cat_fit_table(double r, const std::vector<double>& gains,
                                  const AutoCutoffPolicy& policy = {}, const FitOptions& options = {});

void write_fit_csv(std::ostream& os, const std::vector<FitRow>& rows);

}  // namespace opa
