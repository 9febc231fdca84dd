#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "opa/herald.hpp"

namespace opa {

// Rectangular grid in quadrature units, x = (a + a^dag)/sqrt 2.
struct PhaseSpaceWindow {
  double x_min = -6.0, x_max = 6.0, p_min = -6.0, p_max = 6.0;
  int nx = 201, np = 201;

  void validate() const;
  double dx() const { return (x_max - x_min) / (nx - 1); }
  double dp() const { return (p_max - p_min) / (np - 1); }
  double x(int i) const { return x_min + i * dx(); }
  double p(int j) const { return p_min + j * dp(); }
  // Same spacing, each half-width scaled about the centre.
  PhaseSpaceWindow enlarged(double factor) const;
};

struct WignerGrid {
  PhaseSpaceWindow window;
  Eigen::MatrixXd values;  // values(i, j) = W(x_i, p_j)
  double state_norm;

  double integral() const;       // 2-D trapezoid
  double boundary_max() const;   // largest |W| on the window edge
};

inline constexpr double kBoundaryTolerance = 1e-6;

// Grid values from the position representation,
//   W(x, p) = (1/pi) Integral dy <x - y| rho |x + y> e^{2ipy},
// with the wavefunctions of the eigenvectors of rho summed from Hermite
// functions on a lattice fine enough that the y-trapezoid is spectrally exact.
WignerGrid wigner_of_state(const DensityMatrix& rho, const PhaseSpaceWindow& window);
WignerGrid wigner_of_state(const StateVector& psi, const PhaseSpaceWindow& window);

// Single point from the Fock-basis Laguerre kernel (independent of the grid route).
double wigner_at(const DensityMatrix& rho, double x, double p);

// Centred on (<x>, <p>), half-width 6 standard deviations per quadrature and
// at least 6.
PhaseSpaceWindow auto_window(const DensityMatrix& rho, int points = 201);

// Auto window, enlarged by 25% steps (spacing kept) until the edge passes the
// boundary check. Throws TruncationError after max_enlargements.
WignerGrid auto_wigner(const DensityMatrix& rho, int points = 201, int max_enlargements = 6);

// N = (1/2) Integral (|W| - W). Throws TruncationError when the edge of the
// window still carries |W| >= kBoundaryTolerance.
double negativity_volume(const WignerGrid& grid);

enum class InputFamily { sv, even_cat, odd_cat };
InputFamily parse_family(const std::string& name);
std::string family_name(InputFamily f);
// Unnormalized family member: S(r)|0> or the cat of amplitude alpha.
StateVector family_state(InputFamily f, double param, Cutoff cutoff);

struct NegativityRow {
  double param, g, N, success_probability;
  int dim;
  PhaseSpaceWindow window;
};

struct SweepOptions {
  AutoCutoffPolicy cutoff;
  int points = 201;
  int threads = 0;  // 0: hardware concurrency
};

// One row per (param, g), params outer. Each input gets an automatic cutoff,
// is heralded, and the normalized output's negativity is evaluated on an
// automatic window.
std::vector<NegativityRow> negativity_sweep(InputFamily family, const std::vector<double>& params,
                                            const std::vector<double>& gains,
                                            const SweepOptions& options = {});

void write_grid_csv(std::ostream& os, const WignerGrid& grid);
nlohmann::json grid_to_json(const WignerGrid& grid);
nlohmann::json window_to_json(const PhaseSpaceWindow& w);
void write_sweep_csv(std::ostream& os, const std::vector<NegativityRow>& rows);

}  // namespace opa
