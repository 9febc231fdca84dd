#include "opa/loss.hpp"

#include <algorithm>
#include <cmath>

#include "opa/format.hpp"

namespace opa {

LossSchedule::LossSchedule(std::vector<double> kappa_t) : points_(std::move(kappa_t)) {
  if (points_.empty()) throw ConfigError("loss schedule needs at least one point");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!std::isfinite(points_[i]) || points_[i] < 0.0) throw ConfigError("kappa t must be finite and >= 0");
    if (i > 0 && !(points_[i] > points_[i - 1])) throw ConfigError("kappa t points must strictly increase");
  }
}

CMat loss_generator(const CMat& rho) {
  const int d = static_cast<int>(rho.rows());
  CMat out(d, d);
  for (int n = 0; n < d; ++n)
    for (int m = 0; m < d; ++m) {
      cplx v = -static_cast<double>(m + n) * rho(m, n);
      if (m + 1 < d && n + 1 < d) v += 2.0 * std::sqrt((m + 1.0) * (n + 1.0)) * rho(m + 1, n + 1);
      out(m, n) = v;
    }
  return out;
}

namespace {

CMat integrate(const CMat& rho0, double span, long steps) {
  const double h = span / static_cast<double>(steps);
  CMat rho = rho0;
  for (long s = 0; s < steps; ++s) {
    const CMat k1 = loss_generator(rho);
    const CMat k2 = loss_generator(rho + (0.5 * h) * k1);
    const CMat k3 = loss_generator(rho + (0.5 * h) * k2);
    const CMat k4 = loss_generator(rho + h * k3);
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    rho = 0.5 * (rho + rho.adjoint()).eval();
  }
  return rho;
}

}  // namespace

std::vector<DensityMatrix> evolve_loss(const DensityMatrix& initial, const LossSchedule& schedule,
                                       const LossOptions& options) {
  const int d = initial.dim();
  if (d > kMaxLossDim) throw DimensionError("loss evolution is capped at " + std::to_string(kMaxLossDim) + " levels");
  std::vector<DensityMatrix> out;
  CMat rho = initial.elements();
  double t = 0.0;
  // The generator's spectrum reaches -2(d - 1); RK4 is stable below h ~ 2.7/|lambda|.
  const double h_start = 1.0 / std::max(1, d - 1);
  for (double target : schedule.points()) {
    const double span = target - t;
    if (span > 0.0) {
      const double tr0 = rho.trace().real();
      long n = std::max(1L, static_cast<long>(std::ceil(span / h_start)));
      CMat coarse = integrate(rho, span, n);
      while (true) {
        CMat fine = integrate(rho, span, 2 * n);
        const double diff = (fine - coarse).cwiseAbs().maxCoeff();
        const double drift = std::abs(fine.trace().real() - tr0);
        if (diff < options.step_tol && drift <= options.drift_tol * std::max(span, 1.0)) {
          rho = std::move(fine);
          break;
        }
        n *= 2;
        if (n > (1L << 22)) throw NumericalError("loss integration did not converge");
        coarse = std::move(fine);
      }
      t = target;
    }
    DensityMatrix snap(initial.cutoff(), rho, PsdCheck::skip);
    if (snap.min_eigenvalue() < options.psd_floor)
      throw NumericalError("loss step produced eigenvalue " + fmt12(snap.min_eigenvalue()) +
                           " at kappa t = " + fmt12(target) + "; reduce the step");
    out.push_back(std::move(snap));
  }
  return out;
}

std::vector<DensityMatrix> evolve_loss(const StateVector& initial, const LossSchedule& schedule,
                                       const LossOptions& options) {
  if (initial.modes() != 1) throw DimensionError("loss acts on a single mode");
  return evolve_loss(DensityMatrix::pure(initial), schedule, options);
}

std::vector<DecayRow> negativity_decay_curve(const StateVector& initial, const LossSchedule& schedule,
                                             std::optional<PhaseSpaceWindow> window, int points) {
  const std::vector<DensityMatrix> snaps = evolve_loss(initial, schedule);
  PhaseSpaceWindow w = window ? *window : auto_wigner(DensityMatrix::pure(initial), points).window;
  std::vector<DecayRow> rows;
  for (std::size_t i = 0; i < snaps.size(); ++i)
    rows.push_back({schedule.points()[i], negativity_volume(wigner_of_state(snaps[i], w))});
  return rows;
}

nlohmann::json density_to_json(const DensityMatrix& rho, double kappa_t) {
  nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
  for (int m = 0; m < rho.dim(); ++m) {
    nlohmann::json rr = nlohmann::json::array(), ii = nlohmann::json::array();
    for (int n = 0; n < rho.dim(); ++n) {
      rr.push_back(sig12(rho(m, n).real()));
      ii.push_back(sig12(rho(m, n).imag()));
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ii));
  }
  return {{"kappa_t", sig12(kappa_t)}, {"dim", rho.dim()}, {"real", std::move(re)}, {"imag", std::move(im)}};
}

}  // namespace opa
