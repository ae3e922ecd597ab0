#include "doctest.h"
#include <random>
#include "scalform/logseries.hpp"

using namespace scalform;

namespace {

std::mt19937_64 rng(0x105e71e5);

LogSeries<Rat> random_series(int n = 12, int maxlog = 2, bool with_logs = true)
{
  std::uniform_int_distribution<int> co(-9, 9), den(1, 9), lg(0, maxlog);
  LogSeries<Rat> s(Rat(0), n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j <= (with_logs ? lg(rng) : 0); ++j)
      s.set(k, j, rat(co(rng), den(rng)));
  s.normalize();
  return s;
}

} // namespace

TEST_CASE("derive monomials")
{
  // d/dx x^(1/4) = (1/4) x^(-3/4)
  auto s = LogSeries<Rat>::xpow(rat(1, 4), 10);
  auto d = s.derivative();
  CHECK(d.rho == rat(-3, 4));
  CHECK(d.get(0, 0) == rat(1, 4));

  // d/dx ln x = x^-1
  LogSeries<Rat> l(Rat(0), 10);
  l.set(0, 1, Rat(1));
  auto dl = l.derivative();
  CHECK(dl.rho == Rat(-1));
  CHECK(dl.get(0, 0) == Rat(1));
  CHECK(dl.max_log() == 0);
}

TEST_CASE("multiply")
{
  auto a = LogSeries<Rat>::xpow(rat(1, 4), 10);
  auto sq = a * a;
  CHECK(sq.rho == rat(1, 2));
  CHECK(sq.get(0, 0) == Rat(1));

  auto one = LogSeries<Rat>::one(10);
  auto s = random_series();
  CHECK((one * s) == s);
}

TEST_CASE("integrate")
{
  // integrate(x) = x^2/2
  LogSeries<Rat> x = LogSeries<Rat>::xpow(Rat(1), 10);
  auto ix = x.integral();
  CHECK(ix.rho == Rat(2));
  CHECK(ix.get(0, 0) == rat(1, 2));

  // integrate(1/x) = ln x
  LogSeries<Rat> xinv = LogSeries<Rat>::xpow(Rat(-1), 10);
  auto ixi = xinv.integral();
  CHECK(ixi.rho == Rat(0));
  CHECK(ixi.get(0, 1) == Rat(1));
  CHECK(ixi.get(0, 0) == Rat(0));

  // derive(integrate(s)) == s
  for (int t = 0; t < 10; ++t) {
    auto s = random_series();
    auto ds = s.integral().derivative();
    CHECK(ds == s);
  }
}

TEST_CASE("derivation satisfies the Leibniz law")
{
  for (int t = 0; t < 10; ++t) {
    auto a = random_series(10), b = random_series(10);
    auto lhs = (a * b).derivative();
    auto rhs = a.derivative() * b + a * b.derivative();
    CHECK(lhs == rhs);
  }
}

TEST_CASE("multiplication is associative and commutative")
{
  for (int t = 0; t < 6; ++t) {
    auto a = random_series(9), b = random_series(9), c = random_series(9);
    CHECK((a * b) == (b * a));
    CHECK(((a * b) * c) == (a * (b * c)));
  }
}

TEST_CASE("exponential")
{
  LogSeries<Rat> zero(Rat(0), 8);
  auto e0 = zero.exponential();
  CHECK(e0.get(0, 0) == Rat(1));

  // exp(x^2/32) through x^8
  LogSeries<Rat> s(Rat(2), 8);
  s.set(0, 0, rat(1, 32));
  auto e = s.exponential();
  CHECK(e.get(0, 0) == Rat(1));
  CHECK(e.get(2, 0) == rat(1, 32));
  CHECK(e.get(4, 0) == rat(1, 2048));
  CHECK(e.get(6, 0) == Rat(1) / Rat(196608));
  CHECK(e.get(8, 0) == Rat(1) / (Rat(8388608) * Rat(3))); // 2^23 * 3

  // exp(a+b) = exp(a) exp(b) for log-free positive-valuation series
  for (int t = 0; t < 6; ++t) {
    auto a = random_series(8, 0, false);
    auto b = random_series(8, 0, false);
    LogSeries<Rat> a1(Rat(1), 8), b1(Rat(1), 8);
    for (int k = 0; k < 8; ++k) {
      a1.set(k, 0, a.get(k, 0));
      b1.set(k, 0, b.get(k, 0));
    }
    auto lhs = (a1 + b1).exponential();
    auto rhs = a1.exponential() * b1.exponential();
    CHECK(lhs == rhs);
  }

  // exp(s) exp(-s) = 1
  auto es = s.exponential() * (-s).exponential();
  LogSeries<Rat> one = LogSeries<Rat>::one(es.nvalid);
  CHECK(es == one);

  CHECK_THROWS(LogSeries<Rat>::xpow(Rat(0), 5).exponential());
}

TEST_CASE("rational function multiplication on series")
{
  // (1/x) * x^2 series
  LogSeries<Rat> s = LogSeries<Rat>::xpow(Rat(2), 6);
  QX xinv(Poly<Rat>{Rat(1)}, Poly<Rat>::x());
  auto r = mul_ratfunc(s, xinv);
  CHECK(r.rho == Rat(1));
  CHECK(r.get(0, 0) == Rat(1));

  // 1/(1-x) acts as geometric series
  QX geo(Poly<Rat>{Rat(1)}, Poly<Rat>{Rat(1), Rat(-1)});
  auto g = mul_ratfunc(LogSeries<Rat>::one(5), geo);
  for (int k = 0; k < 5; ++k) CHECK(g.get(k, 0) == Rat(1));
}

TEST_CASE("csv dump")
{
  LogSeries<Rat> s(rat(1, 4), 3);
  s.set(0, 0, Rat(1));
  s.set(2, 1, rat(-3, 16));
  auto text = s.csv();
  CHECK(text.find("k,log_power,numerator,denominator") != std::string::npos);
  CHECK(text.find("2,1,-3,16") != std::string::npos);
}
