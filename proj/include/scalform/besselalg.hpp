#ifndef SCALFORM_BESSELALG_HPP
#define SCALFORM_BESSELALG_HPP

#include <map>
#include <array>
#include "scalform/ratfunc.hpp"
#include "scalform/diffop.hpp"
#include "scalform/specialfun.hpp"

namespace scalform {

// Differential algebra generated by the Bessel pair and its derivative
// partners: monomials b0^a b1^b k0^c k1^d with rational-function
// coefficients, closed under d/dx via
//   b0' = b1/2,  b1' = b0/2 - b1/x,  k0' = -k1/2,  k1' = -k0/2 - k1/x.
// Monomials of a fixed homogeneous degree are linearly independent over
// Q(x), so a zero element certifies annihilation of the whole family.
struct BesselElem {
  using Key = std::array<int, 4>;
  std::map<Key, QX> t;

  bool is_zero() const
  {
    for (auto& [k, v] : t)
      if (!v.is_zero()) return false;
    return true;
  }
  void add_term(const Key& k, const QX& v)
  {
    if (v.is_zero()) return;
    auto it = t.find(k);
    if (it == t.end())
      t[k] = v;
    else {
      it->second += v;
      if (it->second.is_zero()) t.erase(it);
    }
  }
  static BesselElem monomial(int a, int b, int c, int d, QX coeff = QX(Rat(1)))
  {
    BesselElem e;
    e.add_term({a, b, c, d}, coeff);
    return e;
  }
  friend BesselElem operator+(const BesselElem& x, const BesselElem& y)
  {
    BesselElem r = x;
    for (auto& [k, v] : y.t) r.add_term(k, v);
    return r;
  }
  friend BesselElem operator-(const BesselElem& x, const BesselElem& y)
  {
    BesselElem r = x;
    for (auto& [k, v] : y.t) r.add_term(k, -v);
    return r;
  }
  friend BesselElem operator*(const BesselElem& x, const QX& f)
  {
    BesselElem r;
    for (auto& [k, v] : x.t) r.add_term(k, v * f);
    return r;
  }
  friend BesselElem operator*(const BesselElem& x, const BesselElem& y)
  {
    BesselElem r;
    for (auto& [kx, vx] : x.t)
      for (auto& [ky, vy] : y.t)
        r.add_term({kx[0] + ky[0], kx[1] + ky[1], kx[2] + ky[2], kx[3] + ky[3]}, vx * vy);
    return r;
  }

  BesselElem derivative() const
  {
    static const QX half(rat(1, 2));
    static const QX xinv(Poly<Rat>(Rat(1)), Poly<Rat>::x());
    BesselElem r;
    for (auto& [k, v] : t) {
      QX dv = v.derivative();
      if (!dv.is_zero()) r.add_term(k, dv);
      auto bump = [&](int i, int j, const QX& factor) {
        if (k[i] == 0) return;
        Key nk = k;
        --nk[i];
        ++nk[j];
        r.add_term(nk, v * QX(Rat(k[i])) * factor);
      };
      // b0 -> b1/2
      bump(0, 1, half);
      // b1 -> b0/2 - b1/x : two pieces
      if (k[1] > 0) {
        Key nk = k;
        --nk[1];
        ++nk[0];
        r.add_term(nk, v * QX(Rat(k[1])) * half);
        r.add_term(k, -(v * QX(Rat(k[1])) * xinv));
      }
      // k0 -> -k1/2
      if (k[2] > 0) {
        Key nk = k;
        --nk[2];
        ++nk[3];
        r.add_term(nk, -(v * QX(Rat(k[2])) * half));
      }
      // k1 -> -k0/2 - k1/x
      if (k[3] > 0) {
        Key nk = k;
        --nk[3];
        ++nk[2];
        r.add_term(nk, -(v * QX(Rat(k[3])) * half));
        r.add_term(k, -(v * QX(Rat(k[3])) * xinv));
      }
    }
    return r;
  }
};

inline BesselElem apply(const DiffOp<Rat>& op0, const BesselElem& e)
{
  DiffOp<Rat> op = to_plain_basis(op0);
  BesselElem acc, dk = e;
  for (int k = 0; k <= op.order(); ++k) {
    if (!op.c[k].is_zero()) acc = acc + dk * op.c[k];
    if (k < op.order()) dk = dk.derivative();
  }
  return acc;
}

// Substitute the exact series for the generators; the k-pair is taken as the
// rational log partner (a valid solution pair), so annihilation statements
// transfer to any normalization of the Macdonald pair.
inline LogSeries<Rat> to_logseries(const BesselElem& e, int order = 60)
{
  auto b0 = bessel_b0_series(order);
  auto b1 = bessel_b1_series(order);
  auto k0 = bessel_k0hat_series(order);
  auto k1 = bessel_k1hat_series(order);
  LogSeries<Rat> acc(Rat(0), order);
  for (auto& [k, v] : e.t) {
    LogSeries<Rat> m = LogSeries<Rat>::one(order);
    for (int i = 0; i < k[0]; ++i) m = m * b0;
    for (int i = 0; i < k[1]; ++i) m = m * b1;
    for (int i = 0; i < k[2]; ++i) m = m * k0;
    for (int i = 0; i < k[3]; ++i) m = m * k1;
    acc += mul_ratfunc(m, v);
  }
  return acc;
}

} // namespace scalform

#endif
