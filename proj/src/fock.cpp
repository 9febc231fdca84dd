#include "opa/fock.hpp"

#include <cmath>
#include <string>
#include <unsupported/Eigen/MatrixFunctions>

namespace opa {

namespace {

using RowMajorCMat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

int total_size(const Cutoff& c, int modes) {
  return modes == 1 ? c.dim() : c.dim() * c.dim();
}

void require_modes(int modes) {
  if (modes != 1 && modes != 2)
    throw DimensionError("modes must be 1 or 2, got " + std::to_string(modes));
}

}  // namespace

Cutoff::Cutoff(int dim, double warn_threshold) : dim_(dim), warn_(warn_threshold) {
  if (dim < 2) throw DimensionError("cutoff dim must be >= 2, got " + std::to_string(dim));
  if (!(warn_threshold > 0.0)) throw DomainError("truncation warning threshold must be positive");
}

int tail_band(int dim) { return std::max(1, static_cast<int>(std::ceil(0.1 * dim))); }

StateVector::StateVector(Cutoff cutoff, int modes, CVec amplitudes)
    : cutoff_(cutoff), modes_(modes), amps_(std::move(amplitudes)) {
  require_modes(modes);
  if (amps_.size() != total_size(cutoff_, modes_))
    throw DimensionError("amplitude vector length " + std::to_string(amps_.size()) +
                         " does not match cutoff " + std::to_string(cutoff_.dim()) +
                         " for " + std::to_string(modes_) + " mode(s)");
  if (!amps_.allFinite()) throw NumericalError("state amplitudes are not finite");
  const double n2 = norm2();
  if (!(n2 > 0.0)) throw NumericalError("state has zero norm");
  if (n2 > 1.0 + 1e-12)
    throw NumericalError("state norm^2 " + std::to_string(n2) + " exceeds 1");
}

StateVector StateVector::basis(Cutoff cutoff, int n) {
  if (n < 0 || n >= cutoff.dim())
    throw DimensionError("Fock level " + std::to_string(n) + " outside cutoff");
  CVec v = CVec::Zero(cutoff.dim());
  v(n) = 1.0;
  return StateVector(cutoff, 1, std::move(v));
}

StateVector StateVector::basis(Cutoff cutoff, int n_signal, int n_idler) {
  const int d = cutoff.dim();
  if (n_signal < 0 || n_signal >= d || n_idler < 0 || n_idler >= d)
    throw DimensionError("two-mode Fock level outside cutoff");
  CVec v = CVec::Zero(d * d);
  v(n_signal * d + n_idler) = 1.0;
  return StateVector(cutoff, 2, std::move(v));
}

cplx StateVector::operator()(int n) const {
  if (modes_ != 1) throw DimensionError("single index on a two-mode state");
  return amps_(n);
}

cplx StateVector::operator()(int n_signal, int n_idler) const {
  if (modes_ != 2) throw DimensionError("two indices on a single-mode state");
  return amps_(n_signal * dim() + n_idler);
}

double StateVector::tail_population() const {
  const int d = dim();
  const int first = d - tail_band(d);
  if (modes_ == 1) return amps_.tail(d - first).squaredNorm();
  double s = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i >= first || j >= first) s += std::norm(amps_(i * d + j));
  return s;
}

bool StateVector::truncation_warning() const {
  return tail_population() > cutoff_.warn_threshold();
}

StateVector StateVector::normalized() const {
  return StateVector(cutoff_, modes_, amps_ / std::sqrt(norm2()));
}

DensityMatrix::DensityMatrix(Cutoff cutoff, CMat elements, PsdCheck check)
    : cutoff_(cutoff), rho_(std::move(elements)) {
  const int d = cutoff_.dim();
  if (rho_.rows() != d || rho_.cols() != d)
    throw DimensionError("density matrix shape does not match cutoff");
  if (!rho_.allFinite()) throw NumericalError("density matrix has non-finite entries");
  const double herm = (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > 1e-10)
    throw NumericalError("density matrix not Hermitian (deviation " + std::to_string(herm) + ")");
  const cplx tr = rho_.trace();
  if (std::abs(tr.imag()) > 1e-10 || !(tr.real() > 0.0) || tr.real() > 1.0 + 1e-10)
    throw NumericalError("density matrix trace " + std::to_string(tr.real()) + " outside (0, 1]");
  if (check == PsdCheck::strict && min_eigenvalue() < -1e-8)
    throw NumericalError("density matrix is not positive semidefinite");
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  if (psi.modes() != 1) throw DimensionError("density matrices are single-mode");
  const CVec& v = psi.amplitudes();
  return DensityMatrix(psi.cutoff(), v * v.adjoint(), PsdCheck::skip);
}

double DensityMatrix::purity() const { return (rho_ * rho_).trace().real(); }

double DensityMatrix::mean_photon() const {
  double s = 0.0;
  for (int n = 1; n < dim(); ++n) s += n * rho_(n, n).real();
  return s;
}

double DensityMatrix::min_eigenvalue() const {
  const CMat h = 0.5 * (rho_ + rho_.adjoint());
  Eigen::SelfAdjointEigenSolver<CMat> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

FockOperator::FockOperator(Cutoff cutoff, int modes, CMat elements)
    : cutoff_(cutoff), modes_(modes), m_(std::move(elements)) {
  require_modes(modes);
  const int n = total_size(cutoff_, modes_);
  if (m_.rows() != n || m_.cols() != n)
    throw DimensionError("operator shape does not match cutoff");
}

void FockOperator::require_compatible(const FockOperator& o) const {
  if (!(cutoff_ == o.cutoff_) || modes_ != o.modes_)
    throw DimensionError("operators live on different truncated spaces");
}

FockOperator FockOperator::adjoint() const { return {cutoff_, modes_, m_.adjoint()}; }

CVec FockOperator::operator*(const StateVector& psi) const {
  if (!(cutoff_ == psi.cutoff()) || modes_ != psi.modes())
    throw DimensionError("operator and state live on different truncated spaces");
  return m_ * psi.amplitudes();
}

FockOperator FockOperator::operator*(const FockOperator& o) const {
  require_compatible(o);
  return {cutoff_, modes_, m_ * o.m_};
}

FockOperator FockOperator::operator+(const FockOperator& o) const {
  require_compatible(o);
  return {cutoff_, modes_, m_ + o.m_};
}

FockOperator FockOperator::operator-(const FockOperator& o) const {
  require_compatible(o);
  return {cutoff_, modes_, m_ - o.m_};
}

FockOperator FockOperator::operator*(cplx s) const { return {cutoff_, modes_, m_ * s}; }

FockOperator annihilator(Cutoff cutoff) {
  const int d = cutoff.dim();
  CMat m = CMat::Zero(d, d);
  for (int n = 1; n < d; ++n) m(n - 1, n) = std::sqrt(static_cast<double>(n));
  return {cutoff, 1, std::move(m)};
}

FockOperator creator(Cutoff cutoff) { return annihilator(cutoff).adjoint(); }

FockOperator number_operator(Cutoff cutoff) {
  const int d = cutoff.dim();
  CMat m = CMat::Zero(d, d);
  for (int n = 0; n < d; ++n) m(n, n) = static_cast<double>(n);
  return {cutoff, 1, std::move(m)};
}

FockOperator identity(Cutoff cutoff, int modes) {
  require_modes(modes);
  const int n = total_size(cutoff, modes);
  return {cutoff, modes, CMat::Identity(n, n)};
}

FockOperator tensor(const FockOperator& a, const FockOperator& b) {
  if (a.modes() != 1 || b.modes() != 1) throw DimensionError("tensor expects single-mode factors");
  if (!(a.cutoff() == b.cutoff())) throw DimensionError("tensor factors have different cutoffs");
  const int d = a.cutoff().dim();
  if (d > kMaxDenseTensorDim)
    throw DimensionError("dense two-mode operator requested at dim " + std::to_string(d) +
                         "; use the matrix-free squeezer instead");
  const CMat& A = a.matrix();
  const CMat& B = b.matrix();
  CMat m(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) m.block(i * d, k * d, d, d) = A(i, k) * B;
  return {a.cutoff(), 2, std::move(m)};
}

FockOperator matrix_exponential(const FockOperator& op) {
  if (!op.matrix().allFinite()) throw NumericalError("matrix exponential of non-finite operator");
  CMat e = op.matrix().exp();
  if (!e.allFinite()) throw NumericalError("matrix exponential overflowed");
  return {op.cutoff(), op.modes(), std::move(e)};
}

DensityMatrix partial_trace_idler(const StateVector& psi) {
  if (psi.modes() != 2) throw DimensionError("partial trace needs a two-mode state");
  const int d = psi.dim();
  Eigen::Map<const RowMajorCMat> m(psi.amplitudes().data(), d, d);
  return DensityMatrix(psi.cutoff(), m * m.adjoint(), PsdCheck::skip);
}

cplx inner_product(const StateVector& bra, const StateVector& ket) {
  if (!(bra.cutoff() == ket.cutoff()) || bra.modes() != ket.modes())
    throw DimensionError("inner product of states on different truncated spaces");
  return bra.amplitudes().dot(ket.amplitudes());
}

cplx expectation(const FockOperator& op, const StateVector& psi) {
  return psi.amplitudes().dot(op * psi);
}

CVec expm_action(const LinearMap& apply, double norm_bound, const CVec& v, double tol) {
  if (!std::isfinite(norm_bound) || norm_bound < 0.0)
    throw NumericalError("exp-action needs a finite operator norm bound");
  const int steps = std::max(1, static_cast<int>(std::ceil(norm_bound)));
  const double h = 1.0 / steps;
  CVec x = v;
  for (int s = 0; s < steps; ++s) {
    CVec term = x;
    for (int k = 1;; ++k) {
      term = apply(term) * (h / k);
      x += term;
      if (term.norm() <= tol * x.norm()) break;
      if (k > 200) throw NumericalError("exp-action Taylor series did not converge");
    }
  }
  if (!x.allFinite()) throw NumericalError("exp-action produced non-finite values");
  return x;
}

CVec nilpotent_exp_action(const LinearMap& apply, const CVec& v, int max_terms) {
  CVec x = v;
  CVec term = v;
  for (int k = 1; k <= max_terms; ++k) {
    term = apply(term) / static_cast<double>(k);
    if (term.cwiseAbs().maxCoeff() == 0.0) return x;
    x += term;
  }
  throw NumericalError("operator assumed nilpotent did not terminate");
}

}  // namespace opa
