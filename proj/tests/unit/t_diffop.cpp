#include "doctest.h"
#include <random>
#include "scalform/diffop.hpp"

using namespace scalform;

namespace {

std::mt19937_64 rng(0xd1ff0b);

QX random_rf(int maxdeg = 2, int bound = 6)
{
  std::uniform_int_distribution<int> d(0, maxdeg), nz(1, bound), co(-bound, bound);
  Poly<Rat> n, den;
  int dn = d(rng), dd = d(rng);
  for (int i = 0; i <= dn; ++i) n.coeff(i) = Rat(co(rng));
  den.coeff(dd) = Rat(nz(rng));
  for (int i = 0; i < dd; ++i) den.coeff(i) = Rat(co(rng));
  n.trim();
  den.trim();
  if (n.is_zero()) n = Poly<Rat>(Rat(1));
  return QX(n, den);
}

DiffOp<Rat> random_op(int order)
{
  std::vector<QX> c(order + 1);
  for (int i = 0; i < order; ++i) c[i] = random_rf();
  c[order] = random_rf(1);
  return DiffOp<Rat>("x", std::move(c));
}

} // namespace

TEST_CASE("compose basics")
{
  auto D = DiffOp<Rat>::d("x");
  auto D2 = compose(D, D);
  CHECK(D2.order() == 2);
  CHECK(D2.coeff(2) == QX(Rat(1)));
  CHECK(D2.coeff(1).is_zero());
  CHECK(D2.coeff(0).is_zero());

  auto a = random_op(3);
  CHECK(equal_up_to_unit(compose(DiffOp<Rat>::identity("x"), a), a));
  CHECK_THROWS(compose(DiffOp<Rat>::d("x"), DiffOp<Rat>::d("t")));
}

TEST_CASE("compose order adds and acts by chaining")
{
  for (int trial = 0; trial < 8; ++trial) {
    auto a = random_op(2), b = random_op(2);
    auto ab = compose(a, b);
    CHECK(ab.order() == a.order() + b.order());
    // apply to a rational function and compare with staged application
    QX f = random_rf(2);
    CHECK(apply(ab, f) == apply(a, apply(b, f)));
  }
}

TEST_CASE("adjoint basics")
{
  auto D = DiffOp<Rat>::d("x");
  auto adjD = adjoint(D);
  CHECK(adjD.order() == 1);
  CHECK(adjD.coeff(1) == QX(Rat(-1)));
  CHECK(adjD.coeff(0).is_zero());

  // adjoint(x D) = -x D - 1
  DiffOp<Rat> xD("x", {QX(), QX(Poly<Rat>::x())});
  auto adj = adjoint(xD);
  CHECK(adj.coeff(1) == QX(Poly<Rat>::x()) * QX(Rat(-1)));
  CHECK(adj.coeff(0) == QX(Rat(-1)));
}

TEST_CASE("adjoint is an involution and anti-homomorphism")
{
  for (int trial = 0; trial < 6; ++trial) {
    auto a = random_op(3);
    auto b = random_op(2);
    CHECK(adjoint(adjoint(a)).c == a.c);
    auto lhs = adjoint(compose(a, b));
    auto rhs = compose(adjoint(b), adjoint(a));
    CHECK(lhs.c == rhs.c);
  }
}

TEST_CASE("right division")
{
  for (int trial = 0; trial < 8; ++trial) {
    auto a = random_op(2), b = random_op(2);
    auto ab = compose(a, b);
    DiffOp<Rat> q, r;
    right_divide(ab, b, q, r);
    CHECK(r.is_zero());
    CHECK(q.c == a.c);
    // b / b -> (1, 0)
    right_divide(b, b, q, r);
    CHECK(r.is_zero());
    CHECK(q.order() == 0);
    CHECK(q.coeff(0) == QX(Rat(1)));
    // generic remainder has lower order and reconstructs
    auto g = random_op(4);
    right_divide(g, b, q, r);
    CHECK(r.order() < b.order());
    auto back = compose(q, b) + r;
    CHECK(back.c == g.c);
  }
}

TEST_CASE("theta basis round trip")
{
  for (int trial = 0; trial < 8; ++trial) {
    auto a = random_op(3);
    auto t = to_theta_basis(a);
    auto back = to_plain_basis(t);
    CHECK(back.c == a.c);
  }
  // theta = x D
  DiffOp<Rat> theta("x", {QX(), QX(Rat(1))}, DiffOp<Rat>::Basis::ThetaD);
  auto p = to_plain_basis(theta);
  CHECK(p.coeff(1) == QX(Poly<Rat>::x()));
  CHECK(p.coeff(0).is_zero());
}

TEST_CASE("theta form indicial data")
{
  // 4 x D^2 + 4 D - x  has theta form 4 theta^2 - x^2 after one x-multiply
  DiffOp<Rat> op("x", {QX(Poly<Rat>{Rat(0), Rat(-1)}), QX(Rat(4)),
                       QX(Poly<Rat>{Rat(0), Rat(4)})});
  auto tf = theta_form(op);
  REQUIRE((int)tf.P.size() >= 3);
  CHECK(tf.P[0] == Poly<Rat>{Rat(0), Rat(0), Rat(4)});
  CHECK(tf.P[1].is_zero());
  CHECK(tf.P[2] == Poly<Rat>{Rat(-1)});
}

TEST_CASE("operator JSON round trip")
{
  for (int trial = 0; trial < 6; ++trial) {
    auto a = random_op(3);
    auto j = to_json(a);
    auto b = diffop_from_json(j);
    CHECK(a.c == b.c);
    CHECK(a.var == b.var);
  }
}

TEST_CASE("conjugation by a power")
{
  // conjugating D by x^gamma: x^-g D x^g = D + g/x
  auto D = DiffOp<Rat>::d("x");
  auto conj = conjugate_by_power(D, Poly<Rat>::x(), rat(1, 4));
  CHECK(conj.coeff(1) == QX(Rat(1)));
  CHECK(conj.coeff(0) == QX(Poly<Rat>{rat(1, 4)}, Poly<Rat>::x()));
}
