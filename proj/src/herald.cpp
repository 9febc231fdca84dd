#include "opa/herald.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace opa {

GainParam::GainParam(double g, double delta) : g_(g), delta_(delta) {
  if (!std::isfinite(g) || !std::isfinite(delta)) throw DomainError("gain not finite");
  if (g < 1.0) throw DomainError("amplitude gain must be >= 1, got " + std::to_string(g));
}

namespace {

// Matrix-free two-mode ladder products on signal-major vectors.
CVec apply_ab(const CVec& v, int d) {
  CVec out = CVec::Zero(v.size());
  for (int i = 0; i + 1 < d; ++i)
    for (int j = 0; j + 1 < d; ++j)
      out(i * d + j) = std::sqrt((i + 1.0) * (j + 1.0)) * v((i + 1) * d + j + 1);
  return out;
}

CVec apply_adag_bdag(const CVec& v, int d) {
  CVec out = CVec::Zero(v.size());
  for (int i = 1; i < d; ++i)
    for (int j = 1; j < d; ++j) out(i * d + j) = std::sqrt(double(i) * j) * v((i - 1) * d + j - 1);
  return out;
}

void require_two_mode(const StateVector& s) {
  if (s.modes() != 2) throw DimensionError("two-mode squeezer needs a two-mode state");
}

CVec shift_up(const CVec& c) {
  CVec out = CVec::Zero(c.size());
  for (int n = 1; n < c.size(); ++n) out(n) = std::sqrt(static_cast<double>(n)) * c(n - 1);
  return out;
}

CVec coherent_raw(cplx alpha, int dim) { return coherent(alpha, Cutoff(dim)).amplitudes(); }

}  // namespace

StateVector two_mode_squeezer_apply(const StateVector& state, SqueezeParam tau) {
  require_two_mode(state);
  const int d = state.dim();
  if (d > kMaxTwoModeDim)
    throw TruncationError("direct two-mode squeezer capped at " + std::to_string(kMaxTwoModeDim) +
                          " levels per mode");
  if (tau.r() == 0.0) return state;
  const cplx t = tau.value();
  const LinearMap gen = [d, t](const CVec& v) -> CVec {
    return std::conj(t) * apply_ab(v, d) - t * apply_adag_bdag(v, d);
  };
  CVec out = expm_action(gen, 2.0 * tau.r() * (d - 1), state.amplitudes());
  return StateVector(state.cutoff(), 2, std::move(out));
}

StateVector two_mode_squeezer_factored_apply(const StateVector& state, const GainParam& gain) {
  require_two_mode(state);
  const int d = state.dim();
  const double g = gain.g();
  if (g == 1.0) return state;
  const cplx lower = std::polar(gain.G(), -gain.delta());
  const cplx raise = -std::polar(gain.G(), gain.delta());
  CVec v = nilpotent_exp_action([d, lower](const CVec& x) -> CVec { return lower * apply_ab(x, d); },
                                state.amplitudes(), d + 1);
  const double lg = std::log(g);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) v(i * d + j) *= std::exp(-(i + j) * lg);
  v = nilpotent_exp_action([d, raise](const CVec& x) -> CVec { return raise * apply_adag_bdag(x, d); },
                           v, d + 1);
  return StateVector(state.cutoff(), 2, v / g);
}

HeraldOutcome herald_single_photon(const StateVector& signal_in, const GainParam& gain) {
  if (signal_in.modes() != 1) throw DimensionError("herald input must be a single-mode signal");
  const int d = signal_in.dim();
  CVec joint = CVec::Zero(d * d);
  for (int i = 0; i < d; ++i) joint(i * d + 1) = signal_in(i);
  const StateVector out =
      two_mode_squeezer_factored_apply(StateVector(signal_in.cutoff(), 2, std::move(joint)), gain);
  CVec slice(d);
  for (int i = 0; i < d; ++i) slice(i) = out(i, 1);
  const double p = slice.squaredNorm();
  if (!(p >= 1e-14))
    throw HeraldError("heralding probability " + std::to_string(p) + " below 1e-14");
  return {StateVector(signal_in.cutoff(), 1, slice / std::sqrt(p)), p, p};
}

Su11Coefficients su11_disentangle(double r, double theta, const GainParam& gain) {
  Su11Coefficients c{};
  const double g = gain.g();
  c.theta_prime = -std::log(g);
  c.alpha_plus = -std::polar(std::sinh(2 * r), theta);
  c.alpha_minus = -std::polar(std::sinh(2 * r), -theta);
  c.alpha_z = 2.0 * std::cosh(2 * r);
  c.Gamma = std::sqrt(cplx(0.25 * c.alpha_z * c.alpha_z) - c.alpha_plus * c.alpha_minus);
  if (g == 1.0) {
    c.lambda = 1.0;
    return c;
  }
  const cplx gt = c.Gamma * c.theta_prime;
  const cplx den = std::cosh(gt) - c.alpha_z * std::sinh(gt) / (2.0 * c.Gamma);
  c.phi_plus = c.alpha_plus / c.Gamma * std::sinh(gt) / den;
  c.phi_minus = c.alpha_minus / c.Gamma * std::sinh(gt) / den;
  c.phi_z = -2.0 * std::log(den);
  // B = alpha.K - 1/2, so e^{-B ln g} carries sqrt(g), and e^{phi_z K_z}
  // contributes e^{phi_z/4} from the 1/2 inside K_z.
  c.lambda = std::sqrt(g) * std::exp(0.25 * c.phi_z);
  const double t = std::abs(c.phi_plus);
  if (!(t < 1.0)) throw DomainError("SU(1,1) factorization left its domain: |phi_+| >= 1");
  c.r_prime = std::atanh(t);
  c.varphi = t == 0.0 ? 0.0 : std::arg(-c.phi_plus);
  return c;
}

FockOperator su11_generator(double r, double theta, Cutoff cutoff) {
  const FockOperator a = annihilator(cutoff);
  const FockOperator ad = a.adjoint();
  const double ch2 = std::cosh(r) * std::cosh(r), sh2 = std::sinh(r) * std::sinh(r);
  const double s2 = std::sinh(2 * r);
  return ad * a * ch2 + a * ad * sh2 - ad * ad * (0.5 * s2 * std::polar(1.0, theta)) -
         a * a * (0.5 * s2 * std::polar(1.0, -theta));
}

std::pair<SvOutputForm, StateVector> sv_output_closed_form(double r, double theta,
                                                           const GainParam& gain, Cutoff cutoff) {
  const Su11Coefficients k = su11_disentangle(r, theta, gain);
  const double g = gain.g();
  const double G = gain.G();
  const cplx z1 = std::polar(std::tanh(r), theta);
  const cplx z2 = std::polar(std::tanh(k.r_prime), k.varphi);
  const cplx z3 = (z1 + z2) / (1.0 + std::conj(z1) * z2);
  const double rpp = std::atanh(std::abs(z3));
  const double ppp = std::abs(z3) == 0.0 ? 0.0 : std::arg(z3);
  // S(eta) S(xi) = S(xi'') R(beta): the rotation left over from composing two
  // squeezers with different phases.
  const double beta = std::arg(1.0 + z1 * std::conj(z2));
  const double chp = std::cosh(k.r_prime);
  const cplx amp = k.lambda * G * G / g * std::polar(std::sinh(r), theta) * std::exp(0.5 * k.phi_z) *
                   std::pow(chp, 1.5) * std::polar(1.0, beta);

  SvOutputForm f{};
  f.c0 = k.lambda * std::sqrt(chp) / (g * g) - amp * std::polar(std::sinh(rpp), -ppp);
  f.c2 = std::sqrt(2.0) * amp * std::cosh(rpp);
  f.xi_pp = SqueezeParam(rpp, ppp);
  f.Theta = std::remainder(2.0 * beta, 2.0 * std::numbers::pi);

  const CMat s = squeeze_operator(f.xi_pp, cutoff).matrix();
  CVec v = f.c0 * s.col(0);
  if (cutoff.dim() > 2) v += f.c2 * s.col(2);
  v /= v.norm();
  return {f, StateVector(cutoff, 1, std::move(v))};
}

StateVector coherent_output_closed_form(cplx alpha, const GainParam& gain, Cutoff cutoff) {
  const double g = gain.g(), G = gain.G();
  const CVec c = coherent_raw(alpha / g, cutoff.dim());
  CVec v = c / (g * g) - (G * G / g) * alpha * shift_up(c);
  return StateVector(cutoff, 1, v / v.norm());
}

StateVector cat_output_closed_form(const CatSpec& spec, const GainParam& gain, Cutoff cutoff) {
  const double g = gain.g(), G = gain.G();
  const cplx b = spec.alpha() / g;
  const double s = spec.parity() == Parity::even ? 1.0 : -1.0;
  const CVec plus = coherent_raw(b, cutoff.dim());
  const CVec minus = coherent_raw(-b, cutoff.dim());
  CVec v = (plus + s * minus) / (g * g) - (G * G / g) * spec.alpha() * shift_up(plus - s * minus);
  if (v.norm() == 0.0) throw DomainError("cat output vanishes for these parameters");
  return StateVector(cutoff, 1, v / v.norm());
}

GainParam critical_gain(cplx alpha) {
  const double a = std::abs(alpha);
  if (!(a > 1.0)) throw DomainError("critical gain needs |alpha| > 1");
  return GainParam(1.0 / std::sqrt(1.0 - 1.0 / (a * a)));
}

StateVector photon_subtract(const StateVector& state, int n) {
  if (state.modes() != 1) throw DimensionError("photon subtraction acts on one mode");
  if (n < 1) throw DomainError("photon subtraction count must be positive");
  CVec v = state.amplitudes();
  for (int k = 0; k < n; ++k) {
    CVec w = CVec::Zero(v.size());
    for (int m = 0; m + 1 < v.size(); ++m) w(m) = std::sqrt(m + 1.0) * v(m + 1);
    v = std::move(w);
  }
  const double n2 = v.squaredNorm();
  if (!(n2 > 1e-14 * state.norm2())) throw DomainError("photon subtraction annihilates the state");
  return StateVector(state.cutoff(), 1, v / std::sqrt(n2));
}

}  // namespace opa
