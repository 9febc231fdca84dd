#pragma once

#include <optional>
#include <vector>

#include "opa/wigner.hpp"

namespace opa {

// Snapshot times in the dimensionless dissipation strength kappa t.
class LossSchedule {
 public:
  explicit LossSchedule(std::vector<double> kappa_t);
  const std::vector<double>& points() const { return points_; }

 private:
  std::vector<double> points_;
};

inline constexpr int kMaxLossDim = 512;

struct LossOptions {
  double step_tol = 1e-10;   // max |rho_h - rho_{h/2}| per segment
  double drift_tol = 1e-9;   // trace drift per unit kappa t
  double psd_floor = -1e-6;  // smallest eigenvalue tolerated in a snapshot
};

// d rho / d(kappa t) = 2 a rho a^dag - a^dag a rho - rho a^dag a, by RK4. Each
// segment between snapshots is integrated with n and 2n steps, doubling n
// until the two agree and the trace holds; the finer result is kept. Every
// step is symmetrized. One density matrix per schedule point.
std::vector<DensityMatrix> evolve_loss(const DensityMatrix& initial, const LossSchedule& schedule,
                                       const LossOptions& options = {});
std::vector<DensityMatrix> evolve_loss(const StateVector& initial, const LossSchedule& schedule,
                                       const LossOptions& options = {});

// The generator itself, exposed for checks.
CMat loss_generator(const CMat& rho);

struct DecayRow {
  double kappa_t;
  double N;
};

// Negativity volume of each snapshot on one window; without a window the
// automatic window of the initial state is used throughout.
std::vector<DecayRow> negativity_decay_curve(const StateVector& initial, const LossSchedule& schedule,
                                             std::optional<PhaseSpaceWindow> window = std::nullopt,
                                             int points = 201);

nlohmann::json density_to_json(const DensityMatrix& rho, double kappa_t);

}  // namespace opa
