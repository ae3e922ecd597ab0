#include "doctest.h"
#include "scalform/guesser.hpp"
#include "scalform/sigma.hpp"

using namespace scalform;

TEST_CASE("family projection mod p")
{
  GuessBudget budget;
  Fp::set_modulus(budget.prime);
  // constant series at a2 = 0
  auto f0 = project_series_even_family(Fp{0}, 24);
  for (int k = 1; k < 24; ++k) CHECK(f0[k].is_zero());
  // x^4 coefficient is a2/64 for the 1/32 residue
  Fp a = reduce_mod_p(rat(1, 32), budget.prime);
  auto f = project_series_even_family(a, 24);
  CHECK(f[4] == reduce_mod_p(rat(1, 2048), budget.prime));
  CHECK_THROWS(search_ode(std::vector<Fp>(10, Fp{1}), budget));
}

TEST_CASE("search finds the two special residues and only those nearby")
{
  GuessBudget budget;
  Fp::set_modulus(budget.prime);
  auto run = [&](Rat v) {
    auto f = project_series_even_family(reduce_mod_p(v, budget.prime), budget.length());
    return search_ode(f, budget);
  };
  auto h32 = run(rat(1, 32));
  REQUIRE(h32.has_value());
  CHECK(h32->order == 1);
  auto h16 = run(rat(1, 16));
  REQUIRE(h16.has_value());
  CHECK(h16->order == 2);
  CHECK(!run(rat(1, 7)).has_value());
  CHECK(!run(rat(5, 12)).has_value());
  CHECK(!run(rat(22, 7)).has_value());

  // order budget 1 only finds the order-one solution
  GuessBudget q1 = budget;
  q1.qmax = 1;
  auto f16 = project_series_even_family(reduce_mod_p(rat(1, 16), budget.prime), budget.length());
  CHECK(!search_ode(f16, q1).has_value());
  auto f32 = project_series_even_family(reduce_mod_p(rat(1, 32), budget.prime), budget.length());
  auto h = search_ode(f32, q1);
  REQUIRE(h.has_value());
  CHECK(h->order == 1);

  // degenerate constant series is flagged
  std::vector<Fp> ones(budget.length(), Fp{0});
  ones[0] = Fp{1};
  auto hd = search_ode(ones, budget);
  REQUIRE(hd.has_value());
  CHECK(hd->degenerate);
}

TEST_CASE("double prime confirmation on the hits")
{
  for (uint64_t p : {32749ull, 30011ull}) {
    GuessBudget budget;
    budget.prime = p;
    budget.terms = 2 * budget.product + 60; // extra headroom terms
    Fp::set_modulus(p);
    for (auto v : {rat(1, 16), rat(1, 32)}) {
      auto f = project_series_even_family(reduce_mod_p(v, p), budget.terms);
      auto hit = search_ode(f, budget);
      REQUIRE(hit.has_value());
      Int num, den;
      Fp res = reduce_mod_p(v, p);
      REQUIRE(rational_reconstruct(res, num, den));
      CHECK(rat(num, den) == v);
    }
  }
}

TEST_CASE("mini scan over a residue window")
{
  // scan a contiguous residue window containing the image of 1/32
  GuessBudget budget;
  Fp::set_modulus(budget.prime);
  uint64_t target = reduce_mod_p(rat(1, 32), budget.prime).v;
  int hits = 0;
  for (uint64_t a = target - 6; a <= target + 6; ++a) {
    auto f = project_series_even_family(Fp{a}, budget.length());
    auto h = search_ode(f, budget);
    if (h) {
      ++hits;
      CHECK(a == target);
    }
  }
  CHECK(hits == 1);
}
