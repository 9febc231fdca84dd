#pragma once

#include <complex>
#include <functional>
#include <Eigen/Dense>

#include "opa/errors.hpp"

namespace opa {

using cplx = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

inline constexpr double kDefaultWarnThreshold = 1e-8;

// Number of Fock levels kept per mode. Two cutoffs are compatible when their
// dims agree; the warning threshold is a reporting knob only.
class Cutoff {
 public:
  explicit Cutoff(int dim, double warn_threshold = kDefaultWarnThreshold);

  int dim() const { return dim_; }
  double warn_threshold() const { return warn_; }
  bool operator==(const Cutoff& o) const { return dim_ == o.dim_; }

 private:
  int dim_;
  double warn_;
};

// Levels counted as "the top 10%" for tail accounting.
int tail_band(int dim);

class StateVector {
 public:
  // Two-mode amplitudes are signal-major: index = n_signal * dim + n_idler.
  StateVector(Cutoff cutoff, int modes, CVec amplitudes);

  static StateVector basis(Cutoff cutoff, int n);
  static StateVector basis(Cutoff cutoff, int n_signal, int n_idler);

  int modes() const { return modes_; }
  const Cutoff& cutoff() const { return cutoff_; }
  int dim() const { return cutoff_.dim(); }
  const CVec& amplitudes() const { return amps_; }
  cplx operator()(int n) const;
  cplx operator()(int n_signal, int n_idler) const;

  double norm2() const { return amps_.squaredNorm(); }
  // Population in the top tail_band(dim) levels; for two modes, any basis
  // state with either index in the band counts.
  double tail_population() const;
  bool truncation_warning() const;
  StateVector normalized() const;

 private:
  Cutoff cutoff_;
  int modes_;
  CVec amps_;
};

enum class PsdCheck { strict, skip };

class DensityMatrix {
 public:
  DensityMatrix(Cutoff cutoff, CMat elements, PsdCheck check = PsdCheck::strict);
  static DensityMatrix pure(const StateVector& psi);

  const Cutoff& cutoff() const { return cutoff_; }
  int dim() const { return cutoff_.dim(); }
  const CMat& elements() const { return rho_; }
  cplx operator()(int m, int n) const { return rho_(m, n); }

  double trace() const { return rho_.trace().real(); }
  double purity() const;
  double mean_photon() const;
  double min_eigenvalue() const;

 private:
  Cutoff cutoff_;
  CMat rho_;
};

class FockOperator {
 public:
  FockOperator(Cutoff cutoff, int modes, CMat elements);

  int modes() const { return modes_; }
  const Cutoff& cutoff() const { return cutoff_; }
  const CMat& matrix() const { return m_; }
  FockOperator adjoint() const;

  // Raw image of a state; ladder operators do not preserve the norm, so the
  // result is a plain vector.
  CVec operator*(const StateVector& psi) const;
  FockOperator operator*(const FockOperator& o) const;
  FockOperator operator+(const FockOperator& o) const;
  FockOperator operator-(const FockOperator& o) const;
  FockOperator operator*(cplx s) const;

 private:
  void require_compatible(const FockOperator& o) const;
  Cutoff cutoff_;
  int modes_;
  CMat m_;
};

FockOperator annihilator(Cutoff cutoff);
FockOperator creator(Cutoff cutoff);
FockOperator number_operator(Cutoff cutoff);
FockOperator identity(Cutoff cutoff, int modes = 1);

// Dense two-mode operators grow as dim^4; refuse beyond this many levels.
inline constexpr int kMaxDenseTensorDim = 48;
FockOperator tensor(const FockOperator& a, const FockOperator& b);

FockOperator matrix_exponential(const FockOperator& op);

DensityMatrix partial_trace_idler(const StateVector& psi);
cplx inner_product(const StateVector& bra, const StateVector& ket);
cplx expectation(const FockOperator& op, const StateVector& psi);

// Matrix-free exp-action. apply(v) evaluates X v; norm_bound must bound the
// operator norm of X. Taylor series with scaling, each substep summed until
// the next term falls below tol relative to the running vector.
using LinearMap = std::function<CVec(const CVec&)>;
CVec expm_action(const LinearMap& apply, double norm_bound, const CVec& v,
                 double tol = 1e-15);

// exp(X) v for nilpotent X: the series is summed until a term is exactly zero.
CVec nilpotent_exp_action(const LinearMap& apply, const CVec& v, int max_terms);

}  // namespace opa
