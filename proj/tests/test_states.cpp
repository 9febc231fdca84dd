#include "doctest.h"
#include "oracles.hpp"
#include "opa/states.hpp"

#include <cmath>
#include <numbers>

using namespace opa;

TEST_CASE("squeeze parameters are canonical") {
  CHECK(SqueezeParam(1.0, 3.0 * std::numbers::pi).theta() == doctest::Approx(std::numbers::pi));
  CHECK(SqueezeParam(1.0, -std::numbers::pi).theta() == doctest::Approx(std::numbers::pi));
  CHECK(SqueezeParam(1.0, -0.5).theta() == doctest::Approx(-0.5));
  const SqueezeParam neg = SqueezeParam::from_signed(-0.23);
  CHECK(neg.r() == doctest::Approx(0.23));
  CHECK(neg.theta() == doctest::Approx(std::numbers::pi));
  CHECK_THROWS_AS(SqueezeParam(-1.0), DomainError);
  CHECK_THROWS_AS(SqueezeParam(std::nan("")), DomainError);
}

TEST_CASE("squeezed vacuum amplitudes") {
  const Cutoff c(80);
  const StateVector v0 = squeezed_vacuum(SqueezeParam(0.0), c);
  CHECK(std::abs(v0(0) - 1.0) < 1e-15);
  CHECK(std::abs(v0.norm2() - 1.0) < 1e-15);

  const StateVector s = squeezed_vacuum(SqueezeParam(1.0), c);
  const double c0 = 1.0 / std::sqrt(std::cosh(1.0));
  CHECK(s(0).real() == doctest::Approx(0.8050181821945921).epsilon(1e-14));
  CHECK(std::abs(s(0) - c0) < 1e-15);
  // Negative sign: S(r) = exp[r(a^2 - a^dag^2)/2] pushes weight onto -|2>.
  CHECK(s(2).real() == doctest::Approx(-c0 * std::tanh(1.0) * std::sqrt(2.0) / 2.0).epsilon(1e-14));
  CHECK(s(2).real() == doctest::Approx(-0.43352514733965497).epsilon(1e-13));
  for (int n = 1; n < 80; n += 2) CHECK(s(n) == cplx(0.0));

  // Agreement with the exponential of the generator, complex phase included.
  for (const auto& eta : {SqueezeParam(1.0), SqueezeParam(0.7, 1.1), SqueezeParam(1.5, -2.0)}) {
    const CVec ref = oracle::dense_squeeze(eta.value(), 40, 120).col(0);
    const StateVector sv = squeezed_vacuum(eta, Cutoff(40));
    CHECK((ref - sv.amplitudes()).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("truncated squeezed vacuum keeps its raw deficit") {
  const StateVector s = squeezed_vacuum(SqueezeParam(1.5), Cutoff(30));
  CHECK(s.norm2() < 1.0 - 1e-3);
  CHECK(s.truncation_warning());
  const StateVector n = squeezed_vacuum(SqueezeParam(1.5), Cutoff(30), Normalize::yes);
  CHECK(std::abs(n.norm2() - 1.0) < 1e-12);
}

TEST_CASE("squeeze operator matches the dense exponential") {
  // S|n> spreads over ~n e^{2r} levels, so the padded oracle is only trusted on
  // blocks whose columns fit the padding.
  for (const auto& eta : {SqueezeParam(0.4), SqueezeParam(1.0, 0.9)}) {
    const CMat ref = oracle::dense_squeeze(eta.value(), 48, 200);
    const CMat s = squeeze_operator(eta, Cutoff(48)).matrix();
    CHECK((ref - s).cwiseAbs().maxCoeff() < 1e-12);
  }
  const SqueezeParam strong(1.6, std::numbers::pi);
  const CMat ref = oracle::dense_squeeze(strong.value(), 16, 400);
  CHECK((ref - squeeze_operator(strong, Cutoff(16)).matrix()).cwiseAbs().maxCoeff() < 1e-12);

  const CMat s = squeeze_operator(SqueezeParam(0.5), Cutoff(240)).matrix();
  const CMat u = s.adjoint() * s;
  CHECK((u.topLeftCorner(30, 30) - CMat::Identity(30, 30)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("squeeze operator stays bounded at high Fock indices") {
  // Elements of a unitary never exceed one, and S(eta)^T = S(-eta*).
  const Cutoff c(400);
  const SqueezeParam eta(1.0, 0.8);
  const CMat s = squeeze_operator(eta, c).matrix();
  CHECK(s.cwiseAbs().maxCoeff() <= 1.0 + 1e-12);
  const CMat t = squeeze_operator(SqueezeParam(1.0, std::numbers::pi - 0.8), c).matrix();
  CHECK((s.transpose() - t).cwiseAbs().maxCoeff() < 1e-13);
  CHECK((s.col(0) - squeezed_vacuum(eta, c).amplitudes()).cwiseAbs().maxCoeff() < 1e-14);
  // Rows and columns of P S P have norm <= 1.
  CHECK(s.colwise().norm().maxCoeff() <= 1.0 + 1e-12);
}

TEST_CASE("matrix-free squeeze action") {
  const Cutoff c(90);
  CVec v(90);
  for (int n = 0; n < 90; ++n) v(n) = cplx(std::sin(0.3 * n), std::cos(1.7 * n)) * std::exp(-0.05 * n);
  for (const auto& eta : {SqueezeParam(0.0), SqueezeParam(0.8), SqueezeParam(1.2, -2.4)}) {
    const CVec ref = squeeze_operator(eta, c).matrix() * v;
    CHECK((apply_squeeze(eta, v) - ref).cwiseAbs().maxCoeff() < 1e-13);
  }
  const CVec even = apply_squeeze(SqueezeParam(0.8), fock(4, c).amplitudes());
  for (int n = 1; n < 90; n += 2) CHECK(even(n) == cplx(0.0));
}

TEST_CASE("coherent states") {
  const Cutoff c(60);
  CHECK(std::abs(coherent(0.0, c)(0) - 1.0) < 1e-15);
  CHECK(coherent(1.0, c)(0).real() == doctest::Approx(std::exp(-0.5)).epsilon(1e-15));
  const cplx alpha(1.3, -0.4);
  const StateVector s = coherent(alpha, Cutoff(int(4 * std::norm(alpha)) + 20));
  CHECK(std::abs(s.norm2() - 1.0) < 1e-10);
  const double n = expectation(number_operator(s.cutoff()), s).real();
  CHECK(std::abs(n - std::norm(alpha)) < 1e-10);

  const CVec displaced = displacement_operator(alpha, c) * vacuum(c);
  CHECK((displaced - coherent(alpha, c).amplitudes()).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("cat states") {
  const Cutoff c(60);
  const StateVector small = cat(CatSpec(1e-9, Parity::even), c);
  CHECK(std::abs(small(0) - 1.0) < 1e-12);

  const StateVector e = cat(CatSpec(0.8, Parity::even), c);
  const StateVector o = cat(CatSpec(1.2, Parity::odd), c);
  CHECK(std::abs(e.norm2() - 1.0) < 1e-12);
  CHECK(std::abs(o.norm2() - 1.0) < 1e-12);
  for (int n = 1; n < 60; n += 2) CHECK(e(n) == cplx(0.0));
  for (int n = 0; n < 60; n += 2) CHECK(o(n) == cplx(0.0));
  CHECK(odd_fraction(o) == 1.0);

  // Direct superposition of coherent states, normalized numerically.
  const CVec ref = coherent(0.8, c).amplitudes() + coherent(-0.8, c).amplitudes();
  CHECK((ref / ref.norm() - e.amplitudes()).cwiseAbs().maxCoeff() < 1e-14);

  // Tiny odd cat: a|0>-free limit is |1>, without cancellation loss.
  CHECK(std::abs(std::abs(cat(CatSpec(1e-6, Parity::odd), c)(1)) - 1.0) < 1e-10);
  CHECK_THROWS_AS(CatSpec(0.0, Parity::odd), DomainError);
  CHECK(CatSpec(1.0, Parity::even).normalization() == doctest::Approx(1.0 / std::sqrt(2.0 + 2.0 * std::exp(-2.0))));
}

TEST_CASE("fock superpositions") {
  const Cutoff c(10);
  CHECK(std::abs(fock_superposition({{0, 1.0}}, c)(0) - 1.0) < 1e-15);
  const StateVector phi2 = fock_superposition({{0, 1.0}, {2, -1.416}}, c);
  const double n = std::sqrt(1.0 + 1.416 * 1.416);
  CHECK(phi2(0).real() == doctest::Approx(1.0 / n));
  CHECK(phi2(2).real() == doctest::Approx(-1.416 / n));
  CHECK_THROWS_AS(fock_superposition({}, c), DomainError);
  CHECK_THROWS_AS(fock_superposition({{10, 1.0}}, c), DimensionError);
  CHECK_THROWS_AS(fock_superposition({{1, 1.0}, {1, -1.0}}, c), DomainError);
}

TEST_CASE("squeezed targets") {
  const Cutoff c(60);
  const StateVector plain = cat(CatSpec(1.1, Parity::even), c, Normalize::yes);
  const StateVector t0 = squeezed_cat_target(SqueezeParam(0.0), 1.1, Parity::even, c);
  CHECK((plain.amplitudes() - t0.amplitudes()).cwiseAbs().maxCoeff() < 1e-14);

  const StateVector sv = squeezed_cat_target(SqueezeParam(1.0), 0.0, Parity::even, c);
  const StateVector ref = squeezed_vacuum(SqueezeParam(1.0), c, Normalize::yes);
  CHECK((sv.amplitudes() - ref.amplitudes()).cwiseAbs().maxCoeff() < 1e-13);

  const StateVector sq3 = squeezed_fock(3, SqueezeParam::from_signed(-0.23), c);
  const CVec r3 = oracle::dense_squeeze(-0.23, 60, 80).col(3);
  CHECK((sq3.amplitudes() - r3 / r3.norm()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("two-mode squeezed vacuum") {
  const Cutoff c(40);
  CHECK(std::abs(tmsv(SqueezeParam(0.0), c)(0, 0) - 1.0) < 1e-15);
  const double rho = std::atanh(0.5);
  const StateVector t = tmsv(SqueezeParam(rho), c);
  CHECK(t(1, 1).real() == doctest::Approx(-0.5 / std::cosh(rho)).epsilon(1e-14));
  CHECK(t(1, 1).real() == doctest::Approx(-0.4330127).epsilon(1e-6));
  CHECK(t(1, 0) == cplx(0.0));
}

TEST_CASE("thermal state") {
  const DensityMatrix th = thermal(0.25, Cutoff(30));
  CHECK(th(0, 0).real() == doctest::Approx(0.75));
  CHECK(th(3, 3).real() == doctest::Approx(0.75 * std::pow(0.25, 3)));
  CHECK_THROWS_AS(thermal(1.0, Cutoff(3)), DomainError);
}

TEST_CASE("automatic cutoff") {
  const Cutoff c = auto_cutoff([](Cutoff k) { return squeezed_vacuum(SqueezeParam(1.0), k); });
  const StateVector s = squeezed_vacuum(SqueezeParam(1.0), c);
  CHECK(1.0 - s.norm2() <= 1e-14);
  CHECK(s.tail_population() <= 1e-14);
  const StateVector smaller = squeezed_vacuum(SqueezeParam(1.0), Cutoff(c.dim() - 4));
  CHECK(std::max(1.0 - smaller.norm2(), smaller.tail_population()) > 1e-14);

  AutoCutoffPolicy tight;
  tight.max_dim = 40;
  CHECK_THROWS_AS(auto_cutoff([](Cutoff k) { return squeezed_vacuum(SqueezeParam(2.0), k); }, tight),
                  TruncationError);
}
