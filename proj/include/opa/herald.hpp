#pragma once

#include <utility>

#include "opa/states.hpp"

namespace opa {

// Amplitude gain g = cosh(rho) of the two-mode squeezer, with pump phase delta.
class GainParam {
 public:
  explicit GainParam(double g, double delta = 0.0);

  double g() const { return g_; }
  double delta() const { return delta_; }
  double rho() const { return std::acosh(g_); }
  // G = sqrt(g^2 - 1) / g
  double G() const { return std::sqrt(g_ * g_ - 1.0) / g_; }
  SqueezeParam tau() const { return SqueezeParam(rho(), delta_); }

 private:
  double g_;
  double delta_;
};

struct HeraldOutcome {
  StateVector state;           // normalized signal output
  double success_probability;  // equals raw_norm2
  double raw_norm2;
};

struct Su11Coefficients {
  double theta_prime;
  cplx alpha_plus, alpha_minus;
  double alpha_z;
  cplx Gamma;
  cplx phi_plus, phi_minus, phi_z;
  // e^{-B ln g} = lambda exp(phi_+ a^dag^2 / 2) exp(phi_z a^dag a / 2) exp(phi_- a^2 / 2)
  cplx lambda;
  double r_prime, varphi;  // phi_+ = -e^{i varphi} tanh r'
};

// Output of a squeezed-vacuum input: S(xi'') [c0 |0> + c2 |2>], unnormalized.
// c2 carries its full phase, so the state follows from (c0, c2, xi_pp) alone;
// Theta is the composition phase, reported for reference.
struct SvOutputForm {
  cplx c0, c2;
  SqueezeParam xi_pp;
  double Theta;
};

// S(tau) = exp[tau* ab - tau a^dag b^dag] by Taylor exp-action in the box.
// Accurate only while the squeezed state fits the cutoff; the dim cap is
// kMaxTwoModeDim.
inline constexpr int kMaxTwoModeDim = 128;
StateVector two_mode_squeezer_apply(const StateVector& state, SqueezeParam tau);

// S = g^{-1} e^{-G a^dag b^dag} g^{-(n_a + n_b)} e^{G ab}, each factor applied
// exactly. The result equals the truncated image of the exact S for any gain.
StateVector two_mode_squeezer_factored_apply(const StateVector& state, const GainParam& gain);

HeraldOutcome herald_single_photon(const StateVector& signal_in, const GainParam& gain);

Su11Coefficients su11_disentangle(double r, double theta, const GainParam& gain);
// The operator B whose exponential e^{-B ln g} the coefficients factor.
FockOperator su11_generator(double r, double theta, Cutoff cutoff);

std::pair<SvOutputForm, StateVector> sv_output_closed_form(double r, double theta,
                                                           const GainParam& gain, Cutoff cutoff);
StateVector coherent_output_closed_form(cplx alpha, const GainParam& gain, Cutoff cutoff);
StateVector cat_output_closed_form(const CatSpec& spec, const GainParam& gain, Cutoff cutoff);

GainParam critical_gain(cplx alpha);

StateVector photon_subtract(const StateVector& state, int n);

}  // namespace opa
