#include "doctest.h"
#include <cmath>
#include "scalform/fitting.hpp"

using namespace scalform;

TEST_CASE("tabulated bases reconstruct and solve their chains")
{
  for (int n : {1, 2, 3}) {
    auto basis = tabulated_basis(n, 24);
    auto chain = scaled_chain(n);
    for (auto& m : basis) CHECK(apply(chain, m).is_zero());
  }
}

TEST_CASE("one-particle fit reproduces the reference constants")
{
  auto rep = fit_constants(1);
  REQUIRE(rep.constants.size() == 2);
  CHECK(std::abs(rep.constants[0] - (-0.31830)) < 1e-4);
  CHECK(std::abs(rep.constants[1] - 0.25753) < 1e-4);
  REQUIRE(rep.recognized[0].has_value());
  CHECK(rep.recognized[0]->text == "(-1)/pi^1");
  REQUIRE(rep.recognized[1].has_value());
  CHECK(rep.recognized[1]->text == "(1*(2ln2-g))/pi^1");
  // derivative mode agrees
  FitConfig dcfg;
  dcfg.derivative_mode = true;
  auto rep2 = fit_constants(1, dcfg);
  CHECK(std::abs(rep2.constants[0] - rep.constants[0]) < 1e-6);
  CHECK(std::abs(rep2.constants[1] - rep.constants[1]) < 1e-6);
}

TEST_CASE("two-particle fit: constants and vanishing top member")
{
  auto rep = fit_constants(2);
  REQUIRE(rep.constants.size() == 4);
  CHECK(std::abs(rep.constants[0] - 0.0506605) < 1e-4);
  CHECK(std::abs(rep.constants[1] - 0.0193443) < 1e-4);
  CHECK(std::abs(rep.constants[2] - 0.052507) < 1e-4);
  CHECK(std::abs(rep.constants[3]) < 1e-6);
  // recognitions: 1/(2 pi^2) and (1 - 2ln2 + gamma)/pi^2
  REQUIRE(rep.recognized[0].has_value());
  CHECK(std::abs(rep.recognized[0]->value - 1.0 / (2 * M_PI * M_PI)) < 1e-12);
}

TEST_CASE("recognize declines random values")
{
  ConstantDictionary dict;
  CHECK(!recognize(0.1234567, dict).has_value());
  CHECK(recognize(-0.3183099, dict).has_value());
  double c3 = 0.052507; // (1-2ln2+g)^2/(2 pi^2) + 1/(2 pi^2)
  auto r = recognize(c3, dict);
  REQUIRE(r.has_value());
  double u = 2 * std::log(2.0) - 0.57721566490153286;
  double expect = (std::pow(1 - u, 2) + 1) / (2 * M_PI * M_PI);
  CHECK(std::abs(r->value - expect) < 1e-10);
}

TEST_CASE("cross validation at held-out points")
{
  auto rep = fit_constants(1);
  double res = cross_validate(1, rep.constants, {1.5, 3.0});
  CHECK(res < 1e-8);
  // perturbed constants fail validation
  auto bad = rep.constants;
  bad[0] += 1e-3;
  CHECK(cross_validate(1, bad, {1.5, 3.0}) > 1e-5);
}

TEST_CASE("alternate basis transform")
{
  Mat<Rat> M = alternate_two_particle_transform();
  auto rep = fit_constants(2);
  auto tc = basis_change(rep.constants, M);
  CHECK(std::abs(tc[0] - 0.1013211) < 1e-4);
  CHECK(std::abs(tc[1] - (-0.06263)) < 1e-4);
  CHECK(std::abs(tc[2] - 0.61863) < 1e-4);
  CHECK(std::abs(tc[3] - (-0.53296)) < 1e-4);
  ConstantDictionary dict;
  auto r1 = recognize(tc[0], dict);
  REQUIRE(r1.has_value());
  CHECK(std::abs(r1->value - 1.0 / (M_PI * M_PI)) < 1e-12);
  auto r4 = recognize(tc[3], dict);
  REQUIRE(r4.has_value());
  // -(17 + 62 ln 2 - 31 gamma)/(8 pi^2) = -(17 + 31 u)/(8 pi^2)
  double u = 2 * std::log(2.0) - 0.57721566490153286;
  CHECK(std::abs(r4->value - (-(17 + 31 * u) / (8 * M_PI * M_PI))) < 1e-10);
  // identity transform keeps constants
  Mat<Rat> I(4, 4);
  for (int i = 0; i < 4; ++i) I(i, i) = Rat(1);
  auto same = basis_change(rep.constants, I);
  for (int i = 0; i < 4; ++i) CHECK(same[i] == doctest::Approx(rep.constants[i]));
  // basis invariance: reconstructed series agree at a sample point
  auto basis = tabulated_basis(2);
  double x = 2.7;
  double s_old = 0, s_new = 0;
  for (int j = 0; j < 4; ++j) s_old += rep.constants[j] * eval_member(basis[j], x);
  for (int i = 0; i < 4; ++i) {
    double member = 0;
    for (int j = 0; j < 4; ++j)
      if (M(i, j) != 0) member += to_double(M(i, j)) * eval_member(basis[j], x);
    s_new += tc[i] * member;
  }
  CHECK(std::abs(s_old - s_new) < 1e-10);
}
