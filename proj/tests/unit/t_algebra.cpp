#include "doctest.h"
#include <random>
#include "scalform/poly.hpp"
#include "scalform/ratfunc.hpp"
#include "scalform/fp.hpp"
#include "scalform/linalg.hpp"
#include "scalform/quadext.hpp"

using namespace scalform;

namespace {

std::mt19937_64 rng(0x5ca1f04d);

Rat random_rat(int bound = 20)
{
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  return rat(num(rng), den(rng));
}

Poly<Rat> random_poly(int maxdeg)
{
  std::uniform_int_distribution<int> d(0, maxdeg);
  Poly<Rat> p;
  int deg = d(rng);
  for (int i = 0; i <= deg; ++i) p.coeff(i) = random_rat(9);
  p.trim();
  return p;
}

} // namespace

TEST_CASE("poly gcd factor cases")
{
  // (x^2 - 1, x - 1) -> x - 1
  Poly<Rat> a{Rat(-1), Rat(0), Rat(1)};
  Poly<Rat> b{Rat(-1), Rat(1)};
  CHECK(poly_gcd(a, b) == b.monic());

  // (x, 1) -> 1
  Poly<Rat> x{Rat(0), Rat(1)};
  Poly<Rat> one{Rat(1)};
  CHECK(poly_gcd(x, one) == one);

  // gcd(0, 0) = 0
  CHECK(poly_gcd(Poly<Rat>(), Poly<Rat>()).is_zero());
}

TEST_CASE("poly gcd construct-then-check")
{
  for (int trial = 0; trial < 40; ++trial) {
    Poly<Rat> p = random_poly(3);
    Poly<Rat> q = random_poly(4);
    Poly<Rat> r = random_poly(4);
    if (p.is_zero() || q.is_zero() || r.is_zero()) continue;
    if (!poly_gcd(q, r).monic().c.empty() && poly_gcd(q, r).degree() > 0) continue; // want coprime
    Poly<Rat> g = poly_gcd(p * q, p * r);
    CHECK(g == p.monic());
    // divides both inputs exactly
    CHECK(((p * q) % g).is_zero());
    CHECK(((p * r) % g).is_zero());
  }
}

TEST_CASE("rational function arithmetic")
{
  Poly<Rat> x{Rat(0), Rat(1)};
  QX one_over_x(Poly<Rat>{Rat(1)}, x);
  QX xm1_over_x(Poly<Rat>{Rat(-1), Rat(1)}, x);
  CHECK(one_over_x + xm1_over_x == QX(Rat(1)));

  // a * (1/a) = 1 for random nonzero a
  for (int trial = 0; trial < 25; ++trial) {
    Poly<Rat> n = random_poly(4), d = random_poly(4);
    if (n.is_zero() || d.is_zero()) continue;
    QX a(n, d);
    CHECK(a * (QX(Rat(1)) / a) == QX(Rat(1)));
  }

  // ((x^2+1)/x^2) * x^2 = x^2 + 1
  QX f(Poly<Rat>{Rat(1), Rat(0), Rat(1)}, x * x);
  CHECK(f * QX(x * x) == QX(Poly<Rat>{Rat(1), Rat(0), Rat(1)}));

  CHECK_THROWS(QX(Rat(1)) / QX());
}

TEST_CASE("rational function canonicalization is idempotent")
{
  for (int trial = 0; trial < 25; ++trial) {
    Poly<Rat> n = random_poly(5), d = random_poly(5);
    if (d.is_zero()) continue;
    QX a(n, d);
    QX b(a.num, a.den);
    CHECK(a == b);
    CHECK(a.den.is_zero() == false);
    if (!a.is_zero()) CHECK(poly_gcd(a.num, a.den).degree() <= 0);
    CHECK(a.den.lead() == Rat(1));
  }
}

TEST_CASE("field axioms on random rationals")
{
  for (int trial = 0; trial < 100; ++trial) {
    Rat a = random_rat(), b = random_rat(), c = random_rat();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("reduce_mod_p")
{
  CHECK(reduce_mod_p(rat(1, 2), 7).v == 4);   // 2*4 = 8 = 1 mod 7
  CHECK(reduce_mod_p(rat(1, 16), 101).v == 19);
  CHECK_THROWS_AS(reduce_mod_p(rat(3, 7), 7), BadPrime);
}

TEST_CASE("reduce_mod_p is a ring homomorphism")
{
  uint64_t p = 32749;
  Fp::set_modulus(p);
  for (int trial = 0; trial < 60; ++trial) {
    Rat a = random_rat(50), b = random_rat(50);
    if (a.get_den() % p == 0 || b.get_den() % p == 0) continue;
    Rat ab = a * b;
    CHECK(reduce_mod_p(ab, p) == reduce_mod_p(a, p) * reduce_mod_p(b, p));
    CHECK(reduce_mod_p(a + b, p) == reduce_mod_p(a, p) + reduce_mod_p(b, p));
  }
}

TEST_CASE("prime field vector requirements")
{
  CHECK(is_prime_u64(32749));
  CHECK(is_prime_u64(30011));
  CHECK(!is_prime_u64(32748));
  CHECK_THROWS(Fp::set_modulus(32748));
  Fp::set_modulus(101);
  CHECK((Fp{100} + Fp{2}).v == 1);
  CHECK((Fp{3}.inv() * Fp{3}).v == 1);
}

TEST_CASE("rational reconstruction round trip")
{
  uint64_t p = 32749;
  Fp::set_modulus(p);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> num(-120, 120);
    std::uniform_int_distribution<int> den(1, 120);
    Rat q = rat(num(rng), den(rng));
    if (q.get_den() % p == 0) continue;
    Fp r = reduce_mod_p(q, p);
    Int n, d;
    bool ok = rational_reconstruct(r, n, d);
    CHECK(ok);
    if (ok) CHECK(rat(n, d) == q);
  }
}

TEST_CASE("rational roots of polynomials")
{
  // (x - 2)^2 (x + 1/3) (x^2 + 1)
  Poly<Rat> p{Rat(1)};
  Poly<Rat> f1{Rat(-2), Rat(1)};
  Poly<Rat> f2{rat(1, 3), Rat(1)};
  Poly<Rat> f3{Rat(1), Rat(0), Rat(1)};
  p = f1 * f1 * f2 * f3;
  Poly<Rat> residual;
  auto roots = rational_roots(p, &residual);
  REQUIRE(roots.size() == 2);
  bool saw2 = false, sawm13 = false;
  for (auto& [r, m] : roots) {
    if (r == Rat(2)) { saw2 = true; CHECK(m == 2); }
    if (r == rat(-1, 3)) { sawm13 = true; CHECK(m == 1); }
  }
  CHECK(saw2);
  CHECK(sawm13);
  CHECK(residual.degree() == 2);
}

TEST_CASE("linear algebra over exact fields")
{
  Mat<Rat> m(3, 4);
  // x + y + z = 6; 2y + 5z = -4; 2x + 5y - z = 27 with column 3 = rhs
  Rat rows[3][4] = {{Rat(1), Rat(1), Rat(1), Rat(6)},
                    {Rat(0), Rat(2), Rat(5), Rat(-4)},
                    {Rat(2), Rat(5), Rat(-1), Rat(27)}};
  Mat<Rat> A(3, 3);
  std::vector<Rat> b(3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) A(i, j) = rows[i][j];
    b[i] = rows[i][3];
  }
  std::vector<Rat> x;
  REQUIRE(solve_linear(A, b, x));
  CHECK(x[0] == Rat(5));
  CHECK(x[1] == Rat(3));
  CHECK(x[2] == Rat(-2));

  Mat<Rat> s(2, 3);
  s(0, 0) = Rat(1); s(0, 1) = Rat(2); s(0, 2) = Rat(3);
  s(1, 0) = Rat(2); s(1, 1) = Rat(4); s(1, 2) = Rat(6);
  auto ns = nullspace(s);
  CHECK(ns.size() == 2);
}

TEST_CASE("quadratic extension arithmetic")
{
  using E = QuadExt<Rat>;
  E s = E::root(Rat(-1)); // i
  CHECK(s * s == E(Rat(-1), Rat(0), Rat(-1)));
  E z(rat(1, 2), rat(-3, 4), Rat(-1));
  E w = z / z;
  CHECK(w.a == Rat(1));
  CHECK(w.b == Rat(0));
}
