#ifndef SCALFORM_TABULATED_HPP
#define SCALFORM_TABULATED_HPP

#include "scalform/frobenius.hpp"
#include "scalform/operators.hpp"

namespace scalform {

// Tabulated solution bases at x = 0 of the n-particle chains, in the
// normalization used by the reference tables: each member is pinned to its
// printed leading coefficients and then reconstructed exactly inside the
// solution space (the reconstruction is overdetermined, so agreement with
// every printed coefficient is a real check, exercised in the test suite).

namespace tab {

// partial series: list of (k, logpow, coefficient) at exponent 0
struct Partial {
  std::vector<std::tuple<int, int, Rat>> terms;
  LogSeries<Rat> series(int window = 8) const
  {
    LogSeries<Rat> s(Rat(0), window);
    for (auto& [k, j, c] : terms) s.set(k, j, c);
    return s;
  }
};

inline Partial s1_of_1()
{
  return {{{0, 1, Rat(1)},
           {2, 1, rat(1, 16)},
           {4, 1, rat(1, 1024)},
           {2, 0, rat(-1, 16)},
           {4, 0, rat(-3, 2048)}}};
}
inline Partial s2_of_1()
{
  return {{{0, 0, Rat(1)}, {2, 0, rat(1, 16)}, {4, 0, rat(1, 1024)}, {6, 0, rat(1, 147456)}}};
}

inline Partial s1_of_2()
{
  return {{{0, 2, Rat(1)},   {2, 2, rat(-1, 8)},    {4, 2, rat(-1, 512)},  {6, 2, rat(-1, 36864)},
           {2, 1, rat(5, 8)}, {4, 1, rat(9, 1024)},  {6, 1, rat(29, 221184)},
           {2, 0, rat(-3, 4)}, {4, 0, rat(-1, 128)}, {6, 0, rat(-19, 147456)}}};
}
inline Partial s2_of_2()
{
  return {{{0, 1, Rat(1)},    {2, 1, rat(-1, 8)},   {4, 1, rat(-1, 512)}, {6, 1, rat(-1, 36864)},
           {2, 0, rat(5, 16)}, {4, 0, rat(9, 2048)}, {6, 0, rat(29, 442368)}}};
}
inline Partial s3_of_2()
{
  return {{{0, 0, Rat(1)}, {2, 0, rat(-1, 8)}, {4, 0, rat(-1, 512)}, {6, 0, rat(-1, 36864)}}};
}
inline Partial s4_of_2() { return {{{0, 0, Rat(1)}}}; }

inline Partial s1_of_3()
{
  return {{{0, 3, Rat(1)},    {2, 3, rat(7, 16)},    {4, 3, rat(7, 1024)},
           {0, 2, Rat(3)},    {2, 2, rat(-21, 8)},   {4, 2, rat(-87, 2048)},
           {0, 1, rat(9, 2)}, {2, 1, rat(9, 128)},   {4, 1, rat(81, 8192)},
           {0, 0, Rat(3)},    {2, 0, rat(3, 64)},    {4, 0, rat(-75, 2048)}}};
}
inline Partial s2_of_3()
{
  return {{{0, 2, Rat(1)},    {2, 2, rat(7, 16)},   {4, 2, rat(7, 1024)},
           {0, 1, Rat(2)},    {2, 1, rat(1, 32)},   {4, 1, rat(-1, 2048)},
           {0, 0, rat(3, 2)}, {2, 0, rat(3, 128)},  {4, 0, rat(27, 8192)}}};
}
inline Partial s3_of_3()
{
  return {{{0, 1, Rat(1)},  {2, 1, rat(7, 16)},  {4, 1, rat(7, 1024)},
           {0, 0, Rat(1)},  {2, 0, rat(1, 64)},  {4, 0, rat(-1, 4096)}}};
}
inline Partial s4_of_3()
{
  return {{{0, 0, Rat(1)}, {2, 0, rat(7, 16)}, {4, 0, rat(7, 1024)}}};
}

inline Partial s1_of_4()
{
  return {{{0, 4, Rat(1)},         {2, 4, rat(-5, 4)},        {4, 4, rat(-5, 256)},
           {6, 4, rat(-1, 2304)},
           {0, 3, rat(20, 3)},     {2, 3, rat(143, 12)},      {4, 3, rat(283, 1536)},
           {6, 3, rat(5, 1024)},
           {0, 2, rat(64, 3)},     {2, 2, rat(1765, 192)},    {4, 2, rat(1933, 12288)},
           {6, 2, rat(-275, 294912)},
           {0, 1, rat(334, 9)},    {2, 1, rat(5771, 1152)},   {4, 1, rat(-3829, 73728)},
           {6, 1, rat(-6509, 884736)},
           {0, 0, rat(1549, 54)},  {2, 0, rat(21505, 13824)}, {4, 0, rat(466273, 884736)},
           {6, 0, Rat(102762373) / Rat(12740198400L)}}};
}
inline Partial s2_of_4()
{
  return {{{0, 3, Rat(1)},        {2, 3, rat(-5, 4)},       {4, 3, rat(-5, 256)},
           {6, 3, rat(-1, 2304)},
           {0, 2, Rat(5)},        {2, 2, rat(-223, 256)},   {4, 2, rat(-247, 16384)},
           {6, 2, rat(15, 131072)},
           {0, 1, rat(32, 3)},    {2, 1, rat(-473, 1536)},  {4, 1, rat(199, 98304)},
           {6, 1, rat(659, 1179648)},
           {0, 0, rat(167, 18)},  {2, 0, rat(485, 18432)},  {4, 0, rat(-37915, 1179648)},
           {6, 0, Rat(-8508439) / Rat(16986931200L)}}};
}
inline Partial s3_of_4()
{
  return {{{0, 2, Rat(1)},      {2, 2, rat(-5, 4)},      {4, 2, rat(-5, 256)},
           {6, 2, rat(-1, 2304)},
           {0, 1, rat(10, 3)},  {2, 1, rat(-223, 384)},  {4, 1, rat(-247, 24576)},
           {6, 1, rat(5, 65536)},
           {0, 0, rat(32, 9)},  {2, 0, rat(-473, 4608)}, {4, 0, rat(199, 294912)},
           {6, 0, Rat(103027) / Rat(4246732800L)}}};
}
inline Partial s4_of_4()
{
  return {{{0, 1, Rat(1)},     {2, 1, rat(-5, 4)},      {4, 1, rat(-5, 256)},
           {6, 1, rat(-1, 2304)},
           {0, 0, rat(5, 3)},  {2, 0, rat(-223, 768)},  {4, 0, rat(-247, 49152)},
           {6, 0, Rat(-30931) / Rat(707788800L)}}};
}
inline Partial s5_of_4()
{
  return {{{0, 0, Rat(1)}, {2, 0, rat(-5, 4)}, {4, 0, rat(-5, 256)}, {6, 0, rat(-1, 2304)}}};
}

} // namespace tab

// Reconstruct the tabulated basis of the n-particle chain; throws when a
// printed member is not in the solution space.
inline std::vector<LogSeries<Rat>> tabulated_basis(int n, int order = 40)
{
  auto chain = scaled_chain(n);
  auto basis = formal_basis(chain, order);
  std::vector<tab::Partial> parts;
  switch (n) {
    case 1: parts = {tab::s1_of_1(), tab::s2_of_1()}; break;
    case 2: parts = {tab::s1_of_2(), tab::s2_of_2(), tab::s3_of_2(), tab::s4_of_2()}; break;
    case 3:
      parts = {tab::s1_of_3(), tab::s2_of_3(), tab::s3_of_3(), tab::s4_of_3(),
               tab::s1_of_1(), tab::s2_of_1()};
      break;
    case 4:
      parts = {tab::s1_of_4(), tab::s2_of_4(), tab::s3_of_4(), tab::s4_of_4(), tab::s5_of_4(),
               tab::s1_of_2(), tab::s2_of_2(), tab::s3_of_2(), tab::s4_of_2()};
      break;
    default: throw std::invalid_argument("tabulated_basis: n in 1..4");
  }
  std::vector<LogSeries<Rat>> out;
  for (auto& p : parts) {
    LogSeries<Rat> combo;
    if (!match_in_span(basis.members, p.series(), combo))
      throw std::runtime_error("tabulated member not in the solution space");
    out.push_back(combo);
  }
  return out;
}

} // namespace scalform

#endif
