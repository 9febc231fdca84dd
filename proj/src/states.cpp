#include "opa/states.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

namespace opa {

SqueezeParam::SqueezeParam(double r, double theta) : r_(r) {
  if (!std::isfinite(r) || !std::isfinite(theta)) throw DomainError("squeeze parameter not finite");
  if (r < 0.0) throw DomainError("squeeze magnitude must be >= 0; use from_signed for negative values");
  double t = std::remainder(theta, 2.0 * std::numbers::pi);
  if (t <= -std::numbers::pi) t += 2.0 * std::numbers::pi;
  theta_ = t;
}

SqueezeParam SqueezeParam::from_signed(double s) {
  return s < 0.0 ? SqueezeParam(-s, std::numbers::pi) : SqueezeParam(s, 0.0);
}

CatSpec::CatSpec(cplx alpha, Parity parity) : alpha_(alpha), parity_(parity) {
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag()))
    throw DomainError("cat amplitude not finite");
  if (parity == Parity::odd && std::abs(alpha) == 0.0)
    throw DomainError("odd cat state is undefined at alpha = 0");
}

double CatSpec::normalization() const {
  const double a2 = std::norm(alpha_);
  // 2 - 2e^{-2x} written through expm1 so small odd cats keep their digits.
  const double s = parity_ == Parity::even ? 2.0 + 2.0 * std::exp(-2.0 * a2) : -2.0 * std::expm1(-2.0 * a2);
  return 1.0 / std::sqrt(s);
}

namespace {

StateVector finish(Cutoff cutoff, int modes, CVec v, Normalize norm) {
  if (norm == Normalize::yes) v /= v.norm();
  return StateVector(cutoff, modes, std::move(v));
}

// e^{-|alpha|^2/2} alpha^n / sqrt(n!) by recurrence, no factorials.
CVec coherent_amplitudes(cplx alpha, int dim) {
  CVec c(dim);
  c(0) = std::exp(-0.5 * std::norm(alpha));
  for (int n = 1; n < dim; ++n) c(n) = c(n - 1) * alpha / std::sqrt(static_cast<double>(n));
  return c;
}

CVec squeezed_vacuum_amplitudes(SqueezeParam eta, int dim) {
  CVec c = CVec::Zero(dim);
  const cplx x = -std::polar(std::tanh(eta.r()), eta.theta());
  c(0) = 1.0 / std::sqrt(std::cosh(eta.r()));
  for (int k = 1; 2 * k < dim; ++k)
    c(2 * k) = c(2 * k - 2) * x * std::sqrt((2.0 * k - 1.0) / (2.0 * k));
  return c;
}

struct GaussHermite {
  Eigen::VectorXd nodes;
  // w_i e^{y_i^2}, from the Christoffel sum 1 / sum_k h_k(y_i)^2 so nothing underflows.
  Eigen::VectorXd scaled_weights;
};

GaussHermite build_gauss_hermite(int n) {
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n), off(n - 1);
  for (int k = 1; k < n; ++k) off(k - 1) = std::sqrt(0.5 * k);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
  Eigen::VectorXd y = es.eigenvalues();
  for (int it = 0; it < 2; ++it) {  // Newton polish on h_n
    const Eigen::MatrixXd h = hermite_functions(y, n + 1);
    const Eigen::ArrayXd hn = h.row(n).transpose().array();
    const Eigen::ArrayXd dh = std::sqrt(2.0 * n) * h.row(n - 1).transpose().array() - y.array() * hn;
    y.array() -= hn / dh;
  }
  const Eigen::MatrixXd h = hermite_functions(y, n);
  return {y, h.colwise().squaredNorm().cwiseInverse().transpose()};
}

const GaussHermite& gauss_hermite(int n) {
  static std::mutex mu;
  static std::map<int, GaussHermite> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_gauss_hermite(n)).first;
  return it->second;
}

}  // namespace

// Upward recurrence in normalized form is stable.
Eigen::MatrixXd hermite_functions(const Eigen::VectorXd& x, int k) {
  Eigen::MatrixXd h(k, x.size());
  h.row(0) = (-0.5 * x.array().square()).exp() * std::pow(std::numbers::pi, -0.25);
  if (k > 1) h.row(1) = std::sqrt(2.0) * x.array().transpose() * h.row(0).array();
  for (int n = 1; n + 1 < k; ++n)
    h.row(n + 1) = std::sqrt(2.0 / (n + 1)) * x.array().transpose() * h.row(n).array() -
                   std::sqrt(double(n) / (n + 1)) * h.row(n - 1).array();
  return h;
}

StateVector vacuum(Cutoff cutoff) { return StateVector::basis(cutoff, 0); }

StateVector fock(int n, Cutoff cutoff) { return StateVector::basis(cutoff, n); }

StateVector coherent(cplx alpha, Cutoff cutoff, Normalize norm) {
  return finish(cutoff, 1, coherent_amplitudes(alpha, cutoff.dim()), norm);
}

StateVector squeezed_vacuum(SqueezeParam eta, Cutoff cutoff, Normalize norm) {
  return finish(cutoff, 1, squeezed_vacuum_amplitudes(eta, cutoff.dim()), norm);
}

StateVector cat(const CatSpec& spec, Cutoff cutoff, Normalize norm) {
  CVec c = coherent_amplitudes(spec.alpha(), cutoff.dim());
  const int skip = spec.parity() == Parity::even ? 1 : 0;
  const double scale = 2.0 * spec.normalization();
  for (int n = 0; n < c.size(); ++n) c(n) = (n % 2 == skip) ? cplx(0.0) : scale * c(n);
  return finish(cutoff, 1, std::move(c), norm);
}

StateVector fock_superposition(const std::vector<std::pair<int, cplx>>& coeffs, Cutoff cutoff) {
  if (coeffs.empty()) throw DomainError("Fock superposition needs at least one term");
  CVec v = CVec::Zero(cutoff.dim());
  for (const auto& [level, c] : coeffs) {
    if (level < 0 || level >= cutoff.dim())
      throw DimensionError("Fock level " + std::to_string(level) + " outside cutoff");
    v(level) += c;
  }
  if (v.norm() == 0.0) throw DomainError("Fock superposition coefficients cancel to zero");
  return finish(cutoff, 1, std::move(v), Normalize::yes);
}

namespace {

// S(r) = pref * A diag(W) B^T for real r >= 0, A and B the Hermite tables.
struct SqueezeFactors {
  Eigen::MatrixXd A, B;
  Eigen::VectorXd w;
  double pref;
};

SqueezeFactors squeeze_factors(double r, int d) {
  // S(r) dilates wavefunctions, (S h_n)(x) = e^{r/2} h_n(e^r x), so every
  // element is an overlap of two Hermite functions whose product is a
  // polynomial of degree < 2 dim times one Gaussian: a dim-point
  // Gauss-Hermite rule integrates it exactly. (The Fock-space three-term
  // recurrence is unstable past a few dozen columns.)
  const GaussHermite& q = gauss_hermite(d);
  const double lam = std::exp(r);
  const double s = std::sqrt(0.5 * (1.0 + lam * lam));
  const Eigen::VectorXd x = q.nodes / s;
  return {hermite_functions(x, d), hermite_functions(lam * x, d), q.scaled_weights,
          std::exp(0.5 * r) / s};
}

}  // namespace

// The phase enters as S_mn(r e^{i theta}) = e^{i theta (m - n)/2} S_mn(r).
FockOperator squeeze_operator(SqueezeParam eta, Cutoff cutoff) {
  const int d = cutoff.dim();
  const SqueezeFactors f = squeeze_factors(eta.r(), d);
  const Eigen::MatrixXd real = f.pref * (f.A * f.w.asDiagonal() * f.B.transpose());
  CMat m = real.cast<cplx>();
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) {
      if ((i - j) % 2 != 0) m(i, j) = 0.0;  // exact parity, not quadrature residue
      else if (eta.theta() != 0.0) m(i, j) *= std::polar(1.0, 0.5 * eta.theta() * (i - j));
    }
  return {cutoff, 1, std::move(m)};
}

CVec apply_squeeze(SqueezeParam eta, const CVec& v) {
  const int d = static_cast<int>(v.size());
  if (d < 2) throw DimensionError("squeeze action needs at least two levels");
  const SqueezeFactors f = squeeze_factors(eta.r(), d);
  CVec in = v;
  if (eta.theta() != 0.0)
    for (int n = 0; n < d; ++n) in(n) *= std::polar(1.0, -0.5 * eta.theta() * n);
  // Even and odd inputs separately, so parity stays exact.
  CVec out = CVec::Zero(d);
  for (int parity = 0; parity < 2; ++parity) {
    CVec part = CVec::Zero(d);
    for (int n = parity; n < d; n += 2) part(n) = in(n);
    const CVec img = f.pref * (f.A * (f.w.asDiagonal() * (f.B.transpose() * part)));
    for (int m = parity; m < d; m += 2) out(m) = img(m);
  }
  if (eta.theta() != 0.0)
    for (int m = 0; m < d; ++m) out(m) *= std::polar(1.0, 0.5 * eta.theta() * m);
  return out;
}

FockOperator displacement_operator(cplx alpha, Cutoff cutoff, int pad) {
  const Cutoff big(cutoff.dim() + pad);
  const FockOperator a = annihilator(big);
  const FockOperator gen = a.adjoint() * alpha - a * std::conj(alpha);
  const CMat full = matrix_exponential(gen).matrix();
  return {cutoff, 1, full.topLeftCorner(cutoff.dim(), cutoff.dim())};
}

StateVector squeezed_fock(int n, SqueezeParam eta, Cutoff cutoff) {
  if (n < 0 || n >= cutoff.dim()) throw DimensionError("Fock level outside cutoff");
  CVec v = squeeze_operator(eta, cutoff).matrix().col(n);
  return finish(cutoff, 1, std::move(v), Normalize::yes);
}

StateVector squeezed_cat_target(SqueezeParam gamma, double alpha, Parity parity, Cutoff cutoff) {
  CVec v = squeeze_operator(gamma, cutoff) * cat(CatSpec(alpha, parity), cutoff);
  return finish(cutoff, 1, std::move(v), Normalize::yes);
}

StateVector tmsv(SqueezeParam tau, Cutoff cutoff, Normalize norm) {
  const int d = cutoff.dim();
  const cplx x = -std::polar(std::tanh(tau.r()), tau.theta());
  CVec v = CVec::Zero(d * d);
  cplx c = 1.0 / std::cosh(tau.r());
  for (int n = 0; n < d; ++n, c *= x) v(n * d + n) = c;
  return finish(cutoff, 2, std::move(v), norm);
}

DensityMatrix thermal(double lambda, Cutoff cutoff) {
  if (!(lambda >= 0.0 && lambda < 1.0)) throw DomainError("thermal ratio must lie in [0, 1)");
  CMat rho = CMat::Zero(cutoff.dim(), cutoff.dim());
  double w = 1.0 - lambda;
  for (int n = 0; n < cutoff.dim(); ++n, w *= lambda) rho(n, n) = w;
  return DensityMatrix(cutoff, std::move(rho), PsdCheck::skip);
}

double odd_fraction(const StateVector& psi) {
  if (psi.modes() != 1) throw DimensionError("parity split is defined for one mode");
  double odd = 0.0;
  for (int n = 1; n < psi.dim(); n += 2) odd += std::norm(psi(n));
  return odd / psi.norm2();
}

Cutoff auto_cutoff(const std::function<StateVector(Cutoff)>& factory, const AutoCutoffPolicy& policy) {
  double last_tail = 1.0;
  for (int d = std::max(2, policy.min_dim); d <= policy.max_dim; d += policy.step) {
    const StateVector psi = factory(Cutoff(d));
    const double deficit = 1.0 - psi.norm2();
    last_tail = std::max(deficit, psi.tail_population());
    if (last_tail <= policy.tail_tol) return Cutoff(d);
  }
  throw TruncationError("no cutoff up to " + std::to_string(policy.max_dim) +
                        " levels holds the state (tail " + std::to_string(last_tail) + ")");
}

}  // namespace opa
