#include "doctest.h"
#include "scalform/sigma.hpp"
#include "scalform/specialfun.hpp"
#include "scalform/operators.hpp"

using namespace scalform;

TEST_CASE("scaled equation: pure power solutions")
{
  // x^(1/4) solves; x^(1/3) does not
  auto one = LogSeries<Rat>::one(10);
  CHECK(scaled_sigma_residual(rat(1, 4), one).is_zero());
  CHECK(!scaled_sigma_residual(rat(1, 3), one).is_zero());
}

TEST_CASE("scaled equation: x^(1/4) exp(x^2/32)")
{
  LogSeries<Rat> g(Rat(2), 40);
  g.set(0, 0, rat(1, 32));
  auto S = g.exponential();
  CHECK(scaled_sigma_residual(rat(1, 4), S).is_zero());
  // while exp(x^2/16) fails
  LogSeries<Rat> h(Rat(2), 20);
  h.set(0, 0, rat(1, 16));
  CHECK(!scaled_sigma_residual(rat(1, 4), h.exponential()).is_zero());
}

TEST_CASE("scaled equation: Bessel pair times x^(1/4)")
{
  CHECK(scaled_sigma_residual(rat(1, 4), bessel_b0_series(42)).is_zero());
  CHECK(scaled_sigma_residual(rat(1, 4), bessel_k0hat_series(42)).is_zero());
  // a generic combination solves as well
  auto comb = bessel_b0_series(40) + bessel_k0hat_series(40) * rat(3, 7);
  CHECK(scaled_sigma_residual(rat(1, 4), comb).is_zero());
}

TEST_CASE("lattice power solutions under the four exponent relations")
{
  for (int branch : {1, -1}) {
    CHECK(power_solution_residual_vanishes(power_solution_beta_of_alpha_above(branch)));
    CHECK(power_solution_residual_vanishes(power_solution_beta_of_alpha_below(branch)));
    CHECK(power_solution_residual_vanishes(power_solution_alpha_of_beta_above(branch)));
    CHECK(power_solution_residual_vanishes(power_solution_alpha_of_beta_below(branch)));
  }
  // generic pair is not a solution
  using F = QuadExt<RatFunc<QN>>;
  using namespace scalform::detail;
  F a(kA(), f_zero<KNA>(), f_zero<KNA>());
  F b(kC(rat(1, 3)), f_zero<KNA>(), f_zero<KNA>());
  F N(kN(), f_zero<KNA>(), f_zero<KNA>());
  CHECK(!lattice_power_residual(a, b, N, false).is_zero());
}

TEST_CASE("identification with the two-point equation")
{
  CHECK(zeta_identification_holds(rat(1, 2)));
  CHECK(!zeta_identification_holds(Rat(1)));
  CHECK(zeta_identification_holds(rat(1, 2))); // deterministic
}

TEST_CASE("one-parameter even family at exponent 1/4")
{
  auto fam = scaled_even_family(14);
  const auto& S = fam.S;
  using C = RatFunc<Rat>;
  C a2 = C::x();
  CHECK(S.get(0, 0) == C(Rat(1)));
  CHECK(S.get(2, 0) == a2);
  CHECK(S.get(4, 0) == a2 * C(rat(1, 64)));
  // x^6: a2 (1 - 8 a2) / 4608
  C expect6 = a2 * (C(Rat(1)) - a2 * C(Rat(8))) * C(rat(1, 4608));
  CHECK(S.get(6, 0) == expect6);
  // x^8: a2 (5 - 64 a2) / 2359296
  C expect8 = a2 * (C(Rat(5)) - a2 * C(Rat(64))) * C(rat(1, 2359296));
  CHECK(S.get(8, 0) == expect8);
  // x^10: a2 (7 - 104 a2) / 471859200
  C expect10 = a2 * (C(Rat(7)) - a2 * C(Rat(104))) * C(rat(1, 471859200));
  CHECK(S.get(10, 0) == expect10);
  // x^12: a2 (21 - 296 a2 - 512 a2^2) / 271790899200
  C expect12 = a2 * (C(Rat(21)) - a2 * C(Rat(296)) - a2 * a2 * C(Rat(512))) *
               C(Rat(1) / Rat(271790899200L));
  CHECK(S.get(12, 0) == expect12);
}

TEST_CASE("even family specializations")
{
  auto fam = scaled_even_family(12);
  // a2 = 0 truncates to the constant
  for (int k = 1; k < 12; ++k) {
    auto c = fam.S.get(k, 0);
    Rat at0 = c.is_zero() ? Rat(0) : c.eval(Rat(0));
    if (k > 0) CHECK(at0 == Rat(0));
  }
  // a2 = 1/32 reproduces exp(x^2/32)
  LogSeries<Rat> g(Rat(2), 14);
  g.set(0, 0, rat(1, 32));
  auto e = g.exponential();
  for (int k = 0; k < 12; ++k) {
    auto c = fam.S.get(k, 0);
    Rat v = c.is_zero() ? Rat(0) : c.eval(rat(1, 32));
    CHECK(v == e.get(k, 0));
  }
  // a2 = 1/16 reproduces the analytic Bessel solution
  auto b0 = bessel_b0_series(14);
  for (int k = 0; k < 12; ++k) {
    auto c = fam.S.get(k, 0);
    Rat v = c.is_zero() ? Rat(0) : c.eval(rat(1, 16));
    CHECK(v == b0.get(k, 0));
  }
}

TEST_CASE("generic exponent family is an exponential")
{
  // alpha = 1: x exp(+- 3i/8 x), Gaussian-rational coefficients
  auto fam = scaled_generic_family(Rat(1), 12, 1);
  CHECK(fam.obstruction_order == -1);
  // discriminant proportional to -(4a-1)^2/(16a) = -9/16 up to squares
  Rat d = fam.discriminant;
  CHECK(d < 0);
  using C = QuadExt<Rat>;
  C a1 = fam.S.get(1, 0);
  // exponential law: a_k = a1^k / k!
  C acc = a1;
  for (int k = 2; k < 10; ++k) {
    acc = acc * a1;
    acc = acc * C(rat(1, k), Rat(0), d);
    CHECK(fam.S.get(k, 0) == acc);
  }
  // and a1^2 = -9/64
  CHECK(a1 * a1 == C(rat(-9, 64), Rat(0), d));
}

TEST_CASE("two-parameter hypergeometric family solves the lattice equation")
{
  for (Rat N : {rat(1, 3), rat(5, 2)}) {
    auto lh = instantiate_param(hyp_one_particle_op(), N);
    CHECK(lh_two_parameter_family_solves(N, 20, false, lh));
  }
  // the below-Tc offset does not accept this family
  auto lh = instantiate_param(hyp_one_particle_op(), rat(1, 3));
  CHECK(!lh_two_parameter_family_solves(rat(1, 3), 12, true, lh));
}
