#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "opa/fock.hpp"

namespace opa {

// eta = r e^{i theta} with r >= 0 and theta in (-pi, pi]. A negative squeezing
// amplitude is spelled (|s|, pi); see from_signed.
class SqueezeParam {
 public:
  SqueezeParam(double r = 0.0, double theta = 0.0);
  static SqueezeParam from_signed(double s);

  double r() const { return r_; }
  double theta() const { return theta_; }
  cplx value() const { return std::polar(r_, theta_); }

 private:
  double r_;
  double theta_;
};

enum class Parity { even, odd };

class CatSpec {
 public:
  CatSpec(cplx alpha, Parity parity);

  cplx alpha() const { return alpha_; }
  Parity parity() const { return parity_; }
  // N_{alpha,+-} = (2 +- 2 exp(-2|alpha|^2))^{-1/2}
  double normalization() const;

 private:
  cplx alpha_;
  Parity parity_;
};

// Factories keep the raw truncated amplitudes unless asked to renormalize;
// the norm deficit is the truncation signal.
enum class Normalize { no, yes };

StateVector vacuum(Cutoff cutoff);
StateVector fock(int n, Cutoff cutoff);
StateVector coherent(cplx alpha, Cutoff cutoff, Normalize norm = Normalize::no);
StateVector squeezed_vacuum(SqueezeParam eta, Cutoff cutoff, Normalize norm = Normalize::no);
StateVector cat(const CatSpec& spec, Cutoff cutoff, Normalize norm = Normalize::no);
StateVector fock_superposition(const std::vector<std::pair<int, cplx>>& coeffs, Cutoff cutoff);

// Exact truncated Fock matrix elements <m|S(eta)|n>, m, n < dim, of
// S(eta) = exp[(eta* a^2 - eta a^dag^2) / 2].
FockOperator squeeze_operator(SqueezeParam eta, Cutoff cutoff);
// The same truncated matrix applied to a vector without forming it, O(dim^2).
CVec apply_squeeze(SqueezeParam eta, const CVec& v);
// D(alpha) restricted to the cutoff, exponentiated in a padded space so the
// retained block is accurate.
FockOperator displacement_operator(cplx alpha, Cutoff cutoff, int pad = 40);

// Normalized S(eta)|n>.
StateVector squeezed_fock(int n, SqueezeParam eta, Cutoff cutoff);
// Normalized S(gamma)(|alpha> +- |-alpha>).
StateVector squeezed_cat_target(SqueezeParam gamma, double alpha, Parity parity, Cutoff cutoff);

// Two-mode squeezed vacuum S(tau)|0,0> = sum_n (-e^{i delta} tanh rho)^n / cosh rho |n,n>.
StateVector tmsv(SqueezeParam tau, Cutoff cutoff, Normalize norm = Normalize::no);
// Geometric thermal state with ratio lambda: rho_nn = (1 - lambda) lambda^n.
DensityMatrix thermal(double lambda, Cutoff cutoff);

// Normalized Hermite functions h_0 .. h_{k-1} (position wavefunctions of the
// Fock states) at the given points, one row per order.
Eigen::MatrixXd hermite_functions(const Eigen::VectorXd& x, int k);

// Population on odd Fock levels.
double odd_fraction(const StateVector& psi);

struct AutoCutoffPolicy {
  double tail_tol = 1e-14;
  int min_dim = 16;
  int max_dim = 512;
  int step = 4;
};

// Grows the cutoff until the truncated state has both a norm deficit and a top
// band population below tail_tol. Throws TruncationError past max_dim.
Cutoff auto_cutoff(const std::function<StateVector(Cutoff)>& factory,
                   const AutoCutoffPolicy& policy = {});

}  // namespace opa
