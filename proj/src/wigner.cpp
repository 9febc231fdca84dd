#include "opa/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "opa/format.hpp"
#include "opa/parallel.hpp"

namespace opa {

void PhaseSpaceWindow::validate() const {
  for (double v : {x_min, x_max, p_min, p_max})
    if (!std::isfinite(v)) throw ConfigError("window bounds must be finite");
  if (!(x_max > x_min) || !(p_max > p_min)) throw ConfigError("window needs max > min on both axes");
  if (nx < 16 || np < 16) throw ConfigError("window needs at least 16 points per axis");
}

PhaseSpaceWindow PhaseSpaceWindow::enlarged(double factor) const {
  PhaseSpaceWindow w = *this;
  const double cx = 0.5 * (x_min + x_max), cp = 0.5 * (p_min + p_max);
  const double hx = 0.5 * (x_max - x_min) * factor, hp = 0.5 * (p_max - p_min) * factor;
  w.x_min = cx - hx;
  w.x_max = cx + hx;
  w.p_min = cp - hp;
  w.p_max = cp + hp;
  w.nx = static_cast<int>(std::lround((nx - 1) * factor)) + 1;
  w.np = static_cast<int>(std::lround((np - 1) * factor)) + 1;
  return w;
}

double WignerGrid::integral() const {
  const int nx = window.nx, np = window.np;
  double s = 0.0;
  for (int i = 0; i < nx; ++i) {
    const double wi = (i == 0 || i == nx - 1) ? 0.5 : 1.0;
    for (int j = 0; j < np; ++j) s += wi * ((j == 0 || j == np - 1) ? 0.5 : 1.0) * values(i, j);
  }
  return s * window.dx() * window.dp();
}

double WignerGrid::boundary_max() const {
  const Eigen::ArrayXXd a = values.array().abs();
  return std::max({a.row(0).maxCoeff(), a.row(a.rows() - 1).maxCoeff(), a.col(0).maxCoeff(),
                   a.col(a.cols() - 1).maxCoeff()});
}

namespace {

// Modes: rho = sum_r lam_r |v_r><v_r|, v_r the columns of V.
WignerGrid grid_from_modes(const CMat& V, const Eigen::VectorXd& lam, const PhaseSpaceWindow& w,
                           double norm) {
  w.validate();
  const int d = static_cast<int>(V.rows());
  const int rank = static_cast<int>(V.cols());
  // Hermite functions below order d live in |u| < sqrt(2d+1) + a few and carry
  // spatial frequencies of the same size; the margin of 8 covers the Gaussian
  // tails of both. The y-integrand then has frequencies below 2(K + |p|), and a
  // trapezoid step h with 2 pi / h above that is exact to rounding.
  const double K = std::sqrt(2.0 * d + 1.0) + 8.0;
  const double pmax = std::max(std::abs(w.p_min), std::abs(w.p_max));
  const double h_max = std::numbers::pi / (K + pmax);
  const int m = std::max(1, static_cast<int>(std::ceil(w.dx() / h_max)));
  const double h = w.dx() / m;
  const int kmax = static_cast<int>(std::ceil(K / h));
  const int nu = (w.nx - 1) * m + 2 * kmax + 1;

  Eigen::VectorXd u(nu);
  for (int j = 0; j < nu; ++j) u(j) = w.x_min + (j - kmax) * h;
  const CMat psi = hermite_functions(u, d).transpose().cast<cplx>() * V;  // nu x rank

  const int ny = 2 * kmax + 1;
  CMat F(w.nx, ny);
  for (int i = 0; i < w.nx; ++i)
    for (int k = -kmax; k <= kmax; ++k) {
      const int lo = i * m - k + kmax, hi = i * m + k + kmax;
      cplx s = 0.0;
      for (int r = 0; r < rank; ++r) s += lam(r) * psi(lo, r) * std::conj(psi(hi, r));
      F(i, k + kmax) = s;
    }
  CMat E(ny, w.np);
  for (int k = -kmax; k <= kmax; ++k)
    for (int j = 0; j < w.np; ++j) E(k + kmax, j) = std::polar(1.0, 2.0 * w.p(j) * k * h);

  WignerGrid g{w, (F * E).real() * (h / std::numbers::pi), norm};
  if (!g.values.allFinite()) throw NumericalError("non-finite Wigner values");
  return g;
}

}  // namespace

WignerGrid wigner_of_state(const DensityMatrix& rho, const PhaseSpaceWindow& window) {
  Eigen::SelfAdjointEigenSolver<CMat> es(rho.elements());
  const Eigen::VectorXd& ev = es.eigenvalues();
  const double cut = 1e-18 * ev.cwiseAbs().maxCoeff();
  std::vector<int> keep;
  for (int r = 0; r < ev.size(); ++r)
    if (std::abs(ev(r)) > cut) keep.push_back(r);
  CMat V(rho.dim(), static_cast<int>(keep.size()));
  Eigen::VectorXd lam(static_cast<int>(keep.size()));
  for (int c = 0; c < static_cast<int>(keep.size()); ++c) {
    V.col(c) = es.eigenvectors().col(keep[c]);
    lam(c) = ev(keep[c]);
  }
  return grid_from_modes(V, lam, window, rho.trace());
}

WignerGrid wigner_of_state(const StateVector& psi, const PhaseSpaceWindow& window) {
  if (psi.modes() != 1) throw DimensionError("Wigner functions are single-mode only");
  return grid_from_modes(psi.amplitudes(), Eigen::VectorXd::Ones(1), window, psi.norm2());
}

double wigner_at(const DensityMatrix& rho, double x, double p) {
  // W = (1/pi) sum_k c_k Re[e^{-ik phi} sum_n (-1)^n rho_{n+k,n} f_n^k(z)],
  // z = 2(x^2 + p^2), c_0 = 1, c_k = 2, with the normalized Laguerre functions
  // f_n^k = sqrt(n!/(n+k)!) z^{k/2} e^{-z/2} L_n^k(z) from their upward
  // recurrence; every f stays O(1), so large dims are safe.
  const int d = rho.dim();
  const double z = 2.0 * (x * x + p * p);
  const double phi = std::atan2(p, x);
  double w = 0.0;
  for (int k = 0; k < d; ++k) {
    double f0;
    if (z == 0.0) f0 = k == 0 ? 1.0 : 0.0;
    else f0 = std::exp(0.5 * k * std::log(z) - 0.5 * z - 0.5 * std::lgamma(k + 1.0));
    double fm = 0.0, f = f0;
    cplx s = 0.0;
    for (int n = 0; n + k < d; ++n) {
      s += (n % 2 ? -1.0 : 1.0) * rho(n + k, n) * f;
      const double next = ((2.0 * n + k + 1.0 - z) * f - std::sqrt(n * (n + k + 0.0)) * fm) /
                          std::sqrt((n + 1.0) * (n + k + 1.0));
      fm = f;
      f = next;
    }
    w += (k == 0 ? 1.0 : 2.0) * (std::polar(1.0, -k * phi) * s).real();
  }
  return w / std::numbers::pi;
}

PhaseSpaceWindow auto_window(const DensityMatrix& rho, int points) {
  const CMat& r = rho.elements();
  const int d = rho.dim();
  const double tr = rho.trace();
  cplx ea = 0.0, ea2 = 0.0;
  double en = 0.0;
  for (int n = 1; n < d; ++n) {
    ea += std::sqrt(double(n)) * r(n, n - 1);
    en += n * r(n, n).real();
    if (n >= 2) ea2 += std::sqrt(n * (n - 1.0)) * r(n, n - 2);
  }
  ea /= tr;
  ea2 /= tr;
  en /= tr;
  const double mx = std::sqrt(2.0) * ea.real(), mp = std::sqrt(2.0) * ea.imag();
  const double vx = ea2.real() + en + 0.5 - mx * mx;
  const double vp = -ea2.real() + en + 0.5 - mp * mp;
  const double hx = std::max(6.0, 6.0 * std::sqrt(std::max(vx, 0.0)));
  const double hp = std::max(6.0, 6.0 * std::sqrt(std::max(vp, 0.0)));
  PhaseSpaceWindow w{mx - hx, mx + hx, mp - hp, mp + hp, points, points};
  w.validate();
  return w;
}

WignerGrid auto_wigner(const DensityMatrix& rho, int points, int max_enlargements) {
  PhaseSpaceWindow w = auto_window(rho, points);
  for (int step = 0;; ++step) {
    WignerGrid g = wigner_of_state(rho, w);
    if (g.boundary_max() < kBoundaryTolerance) return g;
    if (step == max_enlargements)
      throw TruncationError("Wigner function still " + fmt12(g.boundary_max()) +
                            " on the window edge after enlarging");
    w = w.enlarged(1.25);
  }
}

double negativity_volume(const WignerGrid& grid) {
  const double edge = grid.boundary_max();
  if (!(edge < kBoundaryTolerance))
    throw TruncationError("window too small: |W| = " + fmt12(edge) + " on the edge; enlarge it");
  WignerGrid neg = grid;
  neg.values = (-grid.values.array()).max(0.0).matrix();
  return neg.integral();
}

InputFamily parse_family(const std::string& name) {
  if (name == "sv") return InputFamily::sv;
  if (name == "even_cat" || name == "cat-even") return InputFamily::even_cat;
  if (name == "odd_cat" || name == "cat-odd") return InputFamily::odd_cat;
  throw ConfigError("unknown input family '" + name + "'");
}

std::string family_name(InputFamily f) {
  switch (f) {
    case InputFamily::sv: return "sv";
    case InputFamily::even_cat: return "even_cat";
    case InputFamily::odd_cat: return "odd_cat";
  }
  return "";
}

StateVector family_state(InputFamily f, double param, Cutoff cutoff) {
  switch (f) {
    case InputFamily::sv: return squeezed_vacuum(SqueezeParam(param), cutoff);
    case InputFamily::even_cat: return cat(CatSpec(param, Parity::even), cutoff);
    case InputFamily::odd_cat: return cat(CatSpec(param, Parity::odd), cutoff);
  }
  throw ConfigError("unknown input family");
}

std::vector<NegativityRow> negativity_sweep(InputFamily family, const std::vector<double>& params,
                                            const std::vector<double>& gains,
                                            const SweepOptions& options) {
  if (params.empty() || gains.empty()) throw ConfigError("sweep needs parameters and gains");
  const std::size_t total = params.size() * gains.size();
  std::vector<NegativityRow> rows(total);
  parallel_for(total, options.threads, [&](std::size_t idx) {
    const double param = params[idx / gains.size()];
    const GainParam gain(gains[idx % gains.size()]);
    const Cutoff c =
        auto_cutoff([&](Cutoff k) { return family_state(family, param, k); }, options.cutoff);
    const HeraldOutcome h = herald_single_photon(family_state(family, param, c).normalized(), gain);
    const WignerGrid grid = auto_wigner(DensityMatrix::pure(h.state), options.points);
    rows[idx] = {param, gain.g(), negativity_volume(grid), h.success_probability, c.dim(),
                 grid.window};
  });
  return rows;
}

void write_grid_csv(std::ostream& os, const WignerGrid& grid) {
  os << "x,p,w\n";
  for (int i = 0; i < grid.window.nx; ++i)
    for (int j = 0; j < grid.window.np; ++j)
      os << fmt12(grid.window.x(i)) << ',' << fmt12(grid.window.p(j)) << ','
         << fmt12(grid.values(i, j)) << '\n';
}

nlohmann::json window_to_json(const PhaseSpaceWindow& w) {
  return {{"x_min", sig12(w.x_min)}, {"x_max", sig12(w.x_max)}, {"p_min", sig12(w.p_min)},
          {"p_max", sig12(w.p_max)}, {"nx", w.nx},                {"np", w.np}};
}

nlohmann::json grid_to_json(const WignerGrid& grid) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < grid.window.nx; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < grid.window.np; ++j) row.push_back(sig12(grid.values(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"window", window_to_json(grid.window)},
          {"state_norm", sig12(grid.state_norm)},
          {"values", std::move(rows)}};
}

void write_sweep_csv(std::ostream& os, const std::vector<NegativityRow>& rows) {
  os << "param,g,N,p_success\n";
  for (const auto& r : rows)
    os << fmt12(r.param) << ',' << fmt12(r.g) << ',' << fmt12(r.N) << ','
       << fmt12(r.success_probability) << '\n';
}

}  // namespace opa
