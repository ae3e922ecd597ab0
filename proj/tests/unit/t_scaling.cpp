#include "doctest.h"
#include "scalform/scaling.hpp"
#include "scalform/sigma.hpp"
#include "scalform/frobenius.hpp"
#include "scalform/specialfun.hpp"

using namespace scalform;

TEST_CASE("chain rule case: scaling of D_t")
{
  DiffOp<QN> d = DiffOp<QN>::d("t");
  auto s = scaling_limit(d, {ScalingSpec::Kind::Diagonal});
  CHECK(s.order() == 1);
  CHECK(s.coeff(0).is_zero());
}

TEST_CASE("scaling of the lattice one-particle operator")
{
  // the scaled operator annihilates the Bessel pair at argument x/2
  auto scaled = scaling_limit(lattice_factor_2(), {ScalingSpec::Kind::Diagonal});
  CHECK(equal_up_to_unit(scaled, scaled_factor(2)));
}

TEST_CASE("scaling of the hypergeometric operator annihilates x^(1/4) B0")
{
  auto scaled = scaling_limit(hyp_one_particle_op(), {ScalingSpec::Kind::Diagonal});
  CHECK(scaled.order() == 2);
  // solution x^(1/4) B0(x/2): check by series application
  auto sol = xshift(bessel_b0_series(40), rat(1, 4));
  CHECK(apply(scaled, sol).is_zero());
  auto sol2 = xshift(bessel_k0hat_series(40), rat(1, 4));
  CHECK(apply(scaled, sol2).is_zero());
}

TEST_CASE("next-to-diagonal chains collapse to direct sums at scaling")
{
  // (V2 V1)^scal = L1 (+) L2
  auto v21 = scaling_limit(next_diag_chain(2), {ScalingSpec::Kind::NextDiagonal});
  CHECK(v21.order() == 3);
  CHECK(divides_right(scaled_factor(1), v21));
  CHECK(divides_right(scaled_factor(2), v21));

  // (V3 V2 V1)^scal = L1 (+) L2 (+) L3~
  auto v321 = scaling_limit(next_diag_chain(3), {ScalingSpec::Kind::NextDiagonal});
  CHECK(v321.order() == 6);
  CHECK(divides_right(scaled_factor(1), v321));
  CHECK(divides_right(scaled_factor(2), v321));
  CHECK(divides_right(scaled_factor_3_tilde(), v321));
}

TEST_CASE("scaling commutes with composition up to a left unit on a chain")
{
  auto lhs = scaling_limit(next_diag_chain(2), {ScalingSpec::Kind::NextDiagonal});
  auto v2s = scaling_limit(next_diag_factor(2), {ScalingSpec::Kind::NextDiagonal});
  auto v1s = scaling_limit(next_diag_factor(1), {ScalingSpec::Kind::NextDiagonal});
  auto rhs = compose(v2s, v1s);
  CHECK(equal_up_to_unit(lhs, rhs));
}
