#include "doctest.h"
#include <cmath>
#include "scalform/quadrature.hpp"
#include "scalform/specialfun.hpp"
#include "scalform/operators.hpp"

using namespace scalform;

TEST_CASE("one-particle integral equals the Bessel closed form")
{
  for (double r : {0.5, 1.0, 2.0}) {
    auto est = eval_In(1, r);
    double expect = bessel_k0_num(r) / M_PI;
    CHECK(std::abs(est.value - expect) < 1e-9);
    CHECK(std::abs(est.value - expect) < 10 * est.error_estimate + 1e-12);
  }
}

TEST_CASE("two-particle integral equals its closed form")
{
  for (double r : {0.5, 1.0, 2.0}) {
    auto est = eval_In(2, r);
    double k0 = bessel_k0_num(r), k1 = bessel_k1_num(r);
    double expect = ((0.5 - r * r) * k0 * k0 - r * k0 * k1 + r * r * k1 * k1) / (M_PI * M_PI);
    CHECK(std::abs(est.value - expect) < 1e-8);
  }
}

TEST_CASE("substitution symmetry halves the domain for n = 1")
{
  // v -> -v symmetry: the full-line integral equals twice the half-line one
  double r = 1.0;
  auto grid = detail::build_grid(r, 192, 8, 1e-18);
  auto ax = detail::axis_tables(grid, r);
  double full = 0, half = 0;
  for (size_t i = 0; i < grid.v.size(); ++i) {
    full += ax.ew[i];
    if (grid.v[i] > 0) half += ax.ew[i];
  }
  CHECK(std::abs(full - 2 * half) < 1e-12);
}

TEST_CASE("derivatives against the differentiated closed form")
{
  double r = 1.0;
  // d/dx I_1 at x = 2r: I_1(x) = K0(x/2)/pi, dI/dx = -K1(x/2)/(2 pi)
  auto d1 = eval_In(1, r, {}, 1);
  double expect = -bessel_k1_num(r) / (2 * M_PI);
  CHECK(std::abs(d1.value - expect) < 1e-9);
  // k = 0 equals the plain value
  auto d0 = eval_In(1, r, {}, 0);
  CHECK(d0.value == eval_In(1, r).value);
  // second derivative of I_2 via the closed form, central difference oracle
  auto d2 = eval_In(2, 1.0, {}, 2);
  auto I2 = [](double x) {
    double r0 = x / 2;
    double k0 = bessel_k0_num(r0), k1 = bessel_k1_num(r0);
    return ((0.5 - r0 * r0) * k0 * k0 - r0 * k0 * k1 + r0 * r0 * k1 * k1) / (M_PI * M_PI);
  };
  double h = 1e-4;
  double fd = (I2(2 + h) - 2 * I2(2.0) + I2(2 - h)) / (h * h);
  CHECK(std::abs(d2.value - fd) < 1e-6);
}

TEST_CASE("two-level refinement bound")
{
  for (int n : {1, 2}) {
    QuadratureConfig cfg;
    cfg.nodes_per_axis = 96;
    auto est = eval_In(n, 1.0, cfg);
    QuadratureConfig fine = cfg;
    fine.nodes_per_axis = 192;
    auto better = eval_In(n, 1.0, fine);
    CHECK(std::abs(better.value - est.value) <= est.error_estimate * 1.5 + 1e-14);
  }
}

TEST_CASE("determinism and thread independence")
{
  QuadratureConfig cfg;
  cfg.nodes_per_axis = 48;
  auto a = eval_In(3, 1.0, cfg);
  auto b = eval_In(3, 1.0, cfg);
  CHECK(a.value == b.value);
  setenv("SCALFORM_THREADS", "1", 1);
  auto c = eval_In(3, 1.0, cfg);
  unsetenv("SCALFORM_THREADS");
  CHECK(a.value == c.value);
}

TEST_CASE("annihilation under the integral sign")
{
  // order-two factor on I_1
  auto res = annihilation_check(scaled_factor(2), 1, {1.0, 2.0, 4.0});
  for (auto& r : res) CHECK(std::abs(r.residual) < 1e-7 * std::max(r.scale, 1.0));
  // the bare derivative under the integral sign matches the closed form
  auto resD = annihilation_check(DiffOp<Rat>::d("x"), 1, {2.0});
  CHECK(std::abs(resD[0].residual - (-bessel_k1_num(1.0) / (2 * M_PI))) < 1e-9);
}
