#include "doctest.h"
#include "scalform/frobenius.hpp"
#include "scalform/operators.hpp"

using namespace scalform;

TEST_CASE("indicial exponents")
{
  auto D = DiffOp<Rat>::d("x");
  auto e = indicial_exponents(compose(D, D));
  CHECK(e.total() == 2);
  CHECK(e.contains(Rat(0), 1));
  CHECK(e.contains(Rat(1), 1));

  auto chain42 = scaled_chain(3);
  auto e42 = indicial_exponents(chain42);
  CHECK(e42.total() == 6);
  CHECK(e42.contains(Rat(0), 4));
  CHECK(e42.contains(Rat(2), 2));

  auto chain531 = scaled_chain(4);
  auto e531 = indicial_exponents(chain531);
  CHECK(e531.total() == 9);
  CHECK(e531.contains(Rat(0), 5));
  CHECK(e531.contains(Rat(2), 3));
  CHECK(e531.contains(Rat(6), 1));

  // irregular point detection: D^2 - 1/x^3 has an irregular singularity at 0
  DiffOp<Rat> bad("x", {QX(Poly<Rat>(Rat(-1)), poly_pow(Poly<Rat>::x(), 3)), QX(), QX(Rat(1))});
  CHECK_THROWS(indicial_exponents(bad));
}

TEST_CASE("formal basis of the order-two scaled factor")
{
  auto basis = formal_basis(scaled_factor(2), 40);
  REQUIRE(basis.members.size() == 2);
  for (auto& m : basis.members) {
    auto res = apply(scaled_factor(2), m);
    CHECK(res.is_zero());
  }
  // canonical basis: the log member carries ln(x) * (analytic member)
  const auto& logm = basis.members[0];
  const auto& ana = basis.members[1];
  CHECK(ana.max_log() == 0);
  CHECK(ana.get(0, 0) == Rat(1));
  CHECK(ana.get(2, 0) == rat(1, 16));
  CHECK(ana.get(4, 0) == rat(1, 1024));
  CHECK(ana.get(6, 0) == rat(1, 147456));
  CHECK(logm.max_log() == 1);
  CHECK(logm.get(0, 1) == Rat(1));
  CHECK(logm.get(2, 1) == rat(1, 16));
  CHECK(logm.get(0, 0) == Rat(0));
  CHECK(logm.get(2, 0) == rat(-1, 16));
  CHECK(logm.get(4, 0) == rat(-3, 2048));
}

TEST_CASE("formal basis of D is the constant")
{
  auto basis = formal_basis(DiffOp<Rat>::d("x"), 10);
  REQUIRE(basis.members.size() == 1);
  CHECK(basis.members[0].get(0, 0) == Rat(1));
  CHECK(basis.members[0].max_log() == 0);
}

TEST_CASE("formal basis of the four-dimensional chain")
{
  auto chain = scaled_chain(2);
  auto basis = formal_basis(chain, 30);
  REQUIRE(basis.members.size() == 4);
  for (auto& m : basis.members) CHECK(apply(chain, m).is_zero());

  // the printed analytic member 1 - x^2/8 - x^4/512 - x^6/36864 lies in the span
  LogSeries<Rat> target(Rat(0), 7);
  target.set(0, 0, Rat(1));
  target.set(2, 0, rat(-1, 8));
  target.set(4, 0, rat(-1, 512));
  target.set(6, 0, rat(-1, 36864));
  LogSeries<Rat> combo;
  REQUIRE(match_in_span(basis.members, target, combo));
  // and the reconstruction continues the series consistently
  CHECK(apply(chain, combo).is_zero());
  CHECK(combo.get(0, 0) == Rat(1));
  CHECK(combo.get(2, 0) == rat(-1, 8));
}

TEST_CASE("analytic kernel of the six-dimensional chain")
{
  auto chain = scaled_chain(3);
  auto kernel = analytic_kernel(chain, 20);
  REQUIRE(kernel.size() == 2);
  // normalized: first leads at x^0 with no x^2, second leads at x^2
  const auto& m0 = kernel[0];
  const auto& m2 = kernel[1];
  CHECK(m0.rho == Rat(0));
  CHECK(m0.get(0, 0) == Rat(1));
  CHECK(m0.get(2, 0) == Rat(0));
  CHECK(m0.get(6, 0) == rat(1, 147456));          // 2^14 * 3^2
  CHECK(m0.get(8, 0) == rat(1, 9437184));         // 2^20 * 3^2
  CHECK(m2.rho == Rat(2));
  CHECK(m2.get(0, 0) == Rat(1));
  CHECK(m2.get(2, 0) == rat(1, 64));
  CHECK(m2.get(4, 0) == Rat(0));
  CHECK(m2.get(6, 0) == rat(-1, 786432));         // -1/(2^18 * 3)
  for (auto& m : kernel) CHECK(apply(chain, m).is_zero());
}

TEST_CASE("every basis member is annihilated through the window")
{
  for (int n : {3, 4, 5, 6}) {
    auto op = scaled_factor(n);
    auto basis = formal_basis(op, 25);
    REQUIRE((int)basis.members.size() == op.order());
    for (auto& m : basis.members) CHECK(apply(op, m).is_zero());
  }
}
