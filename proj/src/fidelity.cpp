#include "opa/fidelity.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>

#include <boost/math/tools/minima.hpp>

#include "opa/format.hpp"
#include "opa/parallel.hpp"

namespace opa {

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.modes() != b.modes() || !(a.cutoff() == b.cutoff()))
    throw DimensionError("fidelity needs states on the same cutoff");
  const double f = std::norm(a.amplitudes().dot(b.amplitudes())) / (a.norm2() * b.norm2());
  return std::min(1.0, f);
}

namespace {

CVec padded(const StateVector& psi, int dim) {
  if (psi.modes() != 1) throw DimensionError("fidelity targets are single-mode");
  CVec v = CVec::Zero(std::max(dim, psi.dim()));
  v.head(psi.dim()) = psi.amplitudes() / std::sqrt(psi.norm2());
  return v;
}

// Levels that hold a cat of amplitude alpha to far below double precision.
int cat_levels(double alpha) { return 32 + static_cast<int>(std::ceil(4.0 * alpha * alpha)); }

double overlap_with_cat(const CVec& squeezed_back, double alpha, Parity parity) {
  const int d = static_cast<int>(squeezed_back.size());
  const CVec c = cat(CatSpec(alpha, parity), Cutoff(d)).amplitudes();
  return std::min(1.0, std::norm(c.dot(squeezed_back)));
}

}  // namespace

double cat_target_fidelity(const StateVector& psi, double gamma, double alpha, Parity parity) {
  const CVec v = padded(psi, cat_levels(alpha));
  return overlap_with_cat(apply_squeeze(SqueezeParam::from_signed(-gamma), v), alpha, parity);
}

ClosedFormFidelity fidelity_closed_form(const SvOutputForm& form, double gamma, double alpha) {
  const SqueezeParam xi = form.xi_pp;
  const double th = std::abs(xi.theta());
  const bool collinear = xi.r() == 0.0 || th < 1e-12 || std::abs(th - std::numbers::pi) < 1e-12;
  if (std::abs(form.c0) == 0.0 || !collinear) {
    // Numeric overlap on a cutoff that holds S(xi'')|2>.
    AutoCutoffPolicy policy;
    const Cutoff c0 = auto_cutoff([&](Cutoff k) { return squeezed_vacuum(xi, k); }, policy);
    const int d = std::min(policy.max_dim, c0.dim() + 16);
    CVec base = CVec::Zero(std::max(d, cat_levels(alpha)));
    base(0) = form.c0;
    base(2) = form.c2;
    const CVec psi = apply_squeeze(xi, base);
    const StateVector s(Cutoff(static_cast<int>(psi.size())), 1, psi / psi.norm());
    return {cat_target_fidelity(s, gamma, alpha, Parity::even), true};
  }
  const double r_pp = th < 1e-12 ? xi.r() : -xi.r();
  const double nu = std::exp(-(r_pp - gamma));
  const double nu2 = nu * nu;
  const cplx mu = form.c2 / form.c0;
  const double chi = 1.0 / std::sqrt(1.0 + std::norm(mu));
  const double n_cat = CatSpec(alpha, Parity::even).normalization();
  const double x = (1.0 - nu2 * nu2 + 4.0 * nu2 * alpha * alpha) / ((1.0 + nu2) * (1.0 + nu2));
  const double f = 4.0 * nu * std::exp(-2.0 * alpha * alpha / (1.0 + nu2)) / (1.0 + nu2) *
                   std::norm(chi * n_cat * (std::sqrt(2.0) + std::conj(mu) * x));
  return {f, false};
}

namespace {

using Point = std::array<double, 2>;

struct SimplexOutcome {
  Point x;
  double f;  // minimized value
  int evaluations;
  bool converged;
};

// Nelder-Mead with standard coefficients; trial points are projected onto the box.
template <class Fn>
SimplexOutcome nelder_mead(Fn&& fn, Point x0, Point step, Point lo, Point hi, double tol, int max_eval) {
  auto clamp = [&](Point p) {
    for (int k = 0; k < 2; ++k) p[k] = std::clamp(p[k], lo[k], hi[k]);
    return p;
  };
  int evals = 0;
  auto eval = [&](const Point& p) {
    ++evals;
    return fn(p);
  };
  std::array<Point, 3> v;
  std::array<double, 3> f;
  v[0] = clamp(x0);
  for (int k = 0; k < 2; ++k) {
    Point p = v[0];
    p[k] += (p[k] + step[k] <= hi[k]) ? step[k] : -step[k];
    v[k + 1] = clamp(p);
  }
  for (int k = 0; k < 3; ++k) f[k] = eval(v[k]);

  auto size = [&] {
    double s = 0.0;
    for (int k = 1; k < 3; ++k) s = std::max(s, std::hypot(v[k][0] - v[0][0], v[k][1] - v[0][1]));
    return s;
  };
  auto along = [&](const Point& c, const Point& w, double t) {
    return clamp(Point{c[0] + t * (w[0] - c[0]), c[1] + t * (w[1] - c[1])});
  };
  while (true) {
    std::array<int, 3> order{0, 1, 2};
    std::sort(order.begin(), order.end(), [&](int a, int b) { return f[a] < f[b]; });
    std::array<Point, 3> sv{v[order[0]], v[order[1]], v[order[2]]};
    std::array<double, 3> sf{f[order[0]], f[order[1]], f[order[2]]};
    v = sv;
    f = sf;
    if (size() < tol) return {v[0], f[0], evals, true};
    if (evals >= max_eval) return {v[0], f[0], evals, false};

    const Point c{0.5 * (v[0][0] + v[1][0]), 0.5 * (v[0][1] + v[1][1])};
    const Point xr = along(c, v[2], -1.0);
    const double fr = eval(xr);
    if (fr < f[0]) {
      const Point xe = along(c, v[2], -2.0);
      const double fe = eval(xe);
      if (fe < fr) v[2] = xe, f[2] = fe;
      else v[2] = xr, f[2] = fr;
    } else if (fr < f[1]) {
      v[2] = xr, f[2] = fr;
    } else {
      const bool outside = fr < f[2];
      const Point xc = along(c, outside ? xr : v[2], 0.5);
      const double fc = eval(xc);
      if (fc < (outside ? fr : f[2])) {
        v[2] = xc, f[2] = fc;
      } else {
        for (int k = 1; k < 3; ++k) {
          v[k] = along(v[0], v[k], 0.5);
          f[k] = eval(v[k]);
        }
      }
    }
  }
}

bool better(const FitResult& a, const FitResult& b) {
  constexpr double tie = 1e-10;
  if (std::abs(a.fidelity - b.fidelity) > tie) return a.fidelity > b.fidelity;
  if (std::abs(a.gamma_opt - b.gamma_opt) > 1e-9) return a.gamma_opt < b.gamma_opt;
  return a.alpha_opt < b.alpha_opt;
}

}  // namespace

FitResult optimize_cat_fit(const StateVector& output, Parity parity, const FitOptions& o) {
  if (output.modes() != 1) throw DimensionError("cat fits need a single-mode state");
  if (!(o.gamma_max > o.gamma_min) || !(o.alpha_max > o.alpha_min) || o.grid < 2)
    throw ConfigError("fit box needs max > min and at least two starts per axis");
  const double a_lo = parity == Parity::odd ? std::max(o.alpha_min, 1e-6) : o.alpha_min;
  const CVec psi = padded(output, cat_levels(o.alpha_max));
  const Point lo{o.gamma_min, a_lo}, hi{o.gamma_max, o.alpha_max};
  const Point step{(hi[0] - lo[0]) / (2.0 * (o.grid - 1)), (hi[1] - lo[1]) / (2.0 * (o.grid - 1))};

  auto objective = [&](const Point& p) {
    return -overlap_with_cat(apply_squeeze(SqueezeParam::from_signed(-p[0]), psi), p[1], parity);
  };
  const std::size_t starts = static_cast<std::size_t>(o.grid) * o.grid;
  std::vector<SimplexOutcome> runs(starts);
  parallel_for(starts, o.threads, [&](std::size_t s) {
    const int i = static_cast<int>(s) / o.grid, j = static_cast<int>(s) % o.grid;
    const Point x0{lo[0] + i * (hi[0] - lo[0]) / (o.grid - 1), lo[1] + j * (hi[1] - lo[1]) / (o.grid - 1)};
    runs[s] = nelder_mead(objective, x0, step, lo, hi, o.simplex_tol, o.max_evaluations);
  });

  FitResult best, best_converged;
  bool any = false;
  int evaluations = 0;
  for (std::size_t s = 0; s < starts; ++s) {
    const SimplexOutcome& r = runs[s];
    evaluations += r.evaluations;
    const FitResult cand{r.x[0], r.x[1], -r.f, 0, r.converged};
    if (s == 0 || better(cand, best)) best = cand;
    if (r.converged && (!any || better(cand, best_converged))) best_converged = cand, any = true;
  }
  FitResult out = any ? best_converged : best;
  out.evaluations = evaluations;
  out.converged = any;
  return out;
}

std::vector<NamedTarget> default_targets() {
  return {
      {"|0>-1.416|2>", {{0, 1.0}, {2, -1.416}}, -1, -1.0, 1.0},
      {"S(r)|3>", {}, 3, -1.0, 1.0},
  };
}

std::vector<TargetFit> fit_named_targets(const StateVector& output, const std::vector<NamedTarget>& catalog) {
  std::vector<TargetFit> out;
  for (const NamedTarget& t : catalog) {
    if (t.squeezed_level < 0) {
      int top = 0;
      for (const auto& [level, c] : t.superposition) top = std::max(top, level);
      const CVec psi = padded(output, top + 1);
      const Cutoff c(static_cast<int>(psi.size()));
      const StateVector target = fock_superposition(t.superposition, c);
      out.push_back({t.name, fidelity(StateVector(c, 1, psi), target), std::nan("")});
      continue;
    }
    if (!(t.r_max > t.r_min)) throw ConfigError("target '" + t.name + "' needs r_max > r_min");
    const int n = t.squeezed_level;
    const CVec psi = padded(output, n + 2);
    // <S(r) n|psi> = <n|S(-r)|psi>, exact while psi fits the cutoff.
    auto neg_f = [&](double r) {
      return -std::min(1.0, std::norm(apply_squeeze(SqueezeParam::from_signed(-r), psi)(n)));
    };
    constexpr int scan = 41;
    const double h = (t.r_max - t.r_min) / (scan - 1);
    int best = 0;
    double fbest = neg_f(t.r_min);
    for (int k = 1; k < scan; ++k) {
      const double f = neg_f(t.r_min + k * h);
      if (f < fbest) fbest = f, best = k;
    }
    const double a = std::max(t.r_min, t.r_min + (best - 1) * h);
    const double b = std::min(t.r_max, t.r_min + (best + 1) * h);
    const auto [r, f] = boost::math::tools::brent_find_minima(neg_f, a, b, std::numeric_limits<double>::digits / 2);
    out.push_back({t.name, -f, r});
  }
  return out;
}

std::vector<FitRow> cat_fit_table(double r, const std::vector<double>& gains, const AutoCutoffPolicy& policy,
                                  const FitOptions& options) {
  const SqueezeParam eta(r);
  const Cutoff c = auto_cutoff([&](Cutoff k) { return squeezed_vacuum(eta, k); }, policy);
  const StateVector input = squeezed_vacuum(eta, c).normalized();
  std::vector<FitRow> rows(gains.size());
  FitOptions inner = options;
  inner.threads = 1;
  parallel_for(gains.size(), options.threads, [&](std::size_t i) {
    const HeraldOutcome h = herald_single_photon(input, GainParam(gains[i]));
    rows[i] = {gains[i], optimize_cat_fit(h.state, Parity::even, inner), h.success_probability, c.dim()};
  });
  return rows;
}

void write_fit_csv(std::ostream& os, const std::vector<FitRow>& rows) {
  os << "g,gamma,alpha,F\n";
  for (const auto& r : rows)
    os << fmt12(r.g) << ',' << fmt12(r.fit.gamma_opt) << ',' << fmt12(r.fit.alpha_opt) << ','
       << fmt12(r.fit.fidelity) << '\n';
}

}  // namespace opa
