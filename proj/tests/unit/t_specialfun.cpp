#include "doctest.h"
#include <cmath>
#include "scalform/specialfun.hpp"
#include "scalform/operators.hpp"

using namespace scalform;

TEST_CASE("bessel series coefficients")
{
  auto b0 = bessel_b0_series(20);
  CHECK(b0.get(0, 0) == Rat(1));
  CHECK(b0.get(2, 0) == rat(1, 16));
  CHECK(b0.get(4, 0) == rat(1, 1024));
  CHECK(b0.get(6, 0) == rat(1, 147456));

  // B1 = d/dx (2 B0) as a series identity
  auto b1 = bessel_b1_series(20);
  auto d = bessel_b0_series(21).derivative() * Rat(2);
  CHECK(b1 == d);

  // K0 leading behavior: -ln(x) B0 + correction with harmonic numbers
  auto k0 = bessel_k0hat_series(20);
  CHECK(k0.get(0, 1) == Rat(-1));
  CHECK(k0.get(2, 1) == rat(-1, 16));
  CHECK(k0.get(2, 0) == rat(1, 16));      // h_1 = 1
  CHECK(k0.get(4, 0) == rat(3, 2048));    // h_2 = 3/2 over 1024
}

TEST_CASE("bessel operator annihilates the pair")
{
  auto op = bessel_operator();
  CHECK(apply(op, bessel_b0_series(40)).is_zero());
  CHECK(apply(op, bessel_k0hat_series(40)).is_zero());
}

TEST_CASE("bessel numerics")
{
  CHECK(bessel_i0_num(1e-9) == doctest::Approx(1.0).epsilon(1e-12));
  // K_0(1) against the integral oracle
  CHECK(std::abs(bessel_k0_num(1.0) - k0_integral_oracle(1.0, 0.005)) < 1e-10);
  // Wronskian identity I0 K1 + I1 K0 = 1/r
  for (double r : {0.5, 1.0, 2.0}) {
    double w = bessel_i0_num(r) * bessel_k1_num(r) + bessel_i1_num(r) * bessel_k0_num(r);
    CHECK(std::abs(w - 1.0 / r) < 1e-10);
  }
  // series and integral evaluators agree across the switch point
  for (double r : {0.05, 0.3, 1.0, 1.9}) {
    CHECK(std::abs(bessel_k0_num(r) - k0_integral_oracle(r, 0.005)) < 1e-12);
  }
  // the calibrated constant is 2 ln 2 - gamma
  double expected = 2 * std::log(2.0) - 0.57721566490153286;
  CHECK(std::abs(macdonald_constant() - expected) < 1e-11);
  CHECK_THROWS(bessel_k0_num(-1.0));
}

TEST_CASE("series evaluators agree with numerics at small argument")
{
  auto b0 = bessel_b0_series(60);
  auto k0 = bessel_k0hat_series(60);
  for (double r : {0.1, 0.25, 0.5}) {
    double x = 2 * r;
    CHECK(std::abs(b0.eval_double(x) - bessel_i0_num(r)) < 1e-12);
    double k0true = k0.eval_double(x) + macdonald_constant() * bessel_i0_num(r);
    CHECK(std::abs(k0true - bessel_k0_num(r)) < 1e-12);
  }
}

TEST_CASE("elliptic series")
{
  auto K = elliptic_series(EllipticKind::K, 10);
  auto E = elliptic_series(EllipticKind::E, 10);
  CHECK(K.get(0, 0) == Rat(1));
  CHECK(E.get(0, 0) == Rat(1));
  CHECK(K.get(1, 0) == rat(1, 4));
  CHECK(K.get(2, 0) == rat(9, 64));
  CHECK(E.get(1, 0) == rat(-1, 4));
}

TEST_CASE("gamma products")
{
  CHECK(gamma_product(1) == Rat(1));
  CHECK(gamma_product(3) == Rat(4));
  CHECK(gamma_product(4) == Rat(144));
  CHECK_THROWS(gamma_product(0));
}
