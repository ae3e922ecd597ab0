#ifndef SCALFORM_RATFUNC_HPP
#define SCALFORM_RATFUNC_HPP

#include "scalform/poly.hpp"

namespace scalform {

// Rational function num/den over a field K, canonical form:
// gcd(num, den) = 1 and den monic.
template <class K>
struct RatFunc {
  Poly<K> num, den;

  RatFunc() : den(f_one<K>()) {}
  RatFunc(int k) : num(K(k)), den(f_one<K>()) {}
  explicit RatFunc(K k) : num(k), den(f_one<K>()) {}
  explicit RatFunc(const Poly<K>& p) : num(p), den(f_one<K>()) {}
  RatFunc(const Poly<K>& n, const Poly<K>& d) : num(n), den(d) { reduce(); }

  void reduce()
  {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) {
      den = Poly<K>(f_one<K>());
      return;
    }
    Poly<K> g = poly_gcd(num, den);
    if (g.degree() > 0) {
      num = num / g;
      den = den / g;
    }
    K l = f_inv(den.lead());
    num = num * l;
    den = den * l;
  }

  bool is_zero() const { return num.is_zero(); }
  bool is_poly() const { return den.degree() == 0; }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b)
  {
    return RatFunc(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b)
  {
    return RatFunc(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b)
  {
    return RatFunc(a.num * b.num, a.den * b.den);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b)
  {
    if (b.is_zero()) throw std::domain_error("division by zero rational function");
    return RatFunc(a.num * b.den, a.den * b.num);
  }
  RatFunc operator-() const
  {
    RatFunc r = *this;
    r.num = -r.num;
    return r;
  }
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b)
  {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc derivative() const
  {
    return RatFunc(num.derivative() * den - num * den.derivative(), den * den);
  }

  K eval(const K& x) const
  {
    K d = den.eval(x);
    if (f_is_zero(d)) throw std::domain_error("pole hit in evaluation");
    return num.eval(x) / d;
  }

  RatFunc compose_affine(const K& a, const K& b) const
  {
    return RatFunc(num.compose_affine(a, b), den.compose_affine(a, b));
  }

  static RatFunc x() { return RatFunc(Poly<K>::x()); }
};

template <class K>
struct FromRat<RatFunc<K>> {
  static RatFunc<K> get(const Rat& q) { return RatFunc<K>(Poly<K>(FromRat<K>::get(q))); }
};

template <class K>
RatFunc<K> rf_pow(const RatFunc<K>& a, int e)
{
  RatFunc<K> r(f_one<K>());
  RatFunc<K> base = e < 0 ? RatFunc<K>(f_one<K>()) / a : a;
  unsigned n = e < 0 ? -e : e;
  while (n) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

using QQ = Rat;
using QX = RatFunc<Rat>;       // rational functions of one variable over the rationals
using QN = RatFunc<Rat>;       // the same type, used as the parameter field Q(N)
using QNX = RatFunc<RatFunc<Rat>>; // Q(N)(x) elements

// gcd of polynomials whose coefficients are themselves rational functions:
// certify coprimality (the common case) by evaluating the parameter, which
// avoids the nested-fraction Euclid blowup; fall back to Euclid otherwise.
inline Poly<RatFunc<Rat>> poly_gcd(Poly<RatFunc<Rat>> a, Poly<RatFunc<Rat>> b)
{
  using K = RatFunc<Rat>;
  if (a.is_zero() && b.is_zero()) return a;
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return Poly<K>(f_one<K>());
  for (long pt : {17L, 23L, 31L}) {
    Rat n0(pt);
    bool pole = false;
    Poly<Rat> a0, b0;
    auto eval_poly = [&](const Poly<K>& p, Poly<Rat>& out) {
      out = Poly<Rat>();
      for (int i = 0; i <= p.degree(); ++i) {
        if (p[i].den.eval(n0) == 0) { pole = true; return; }
        out.coeff(i) = p[i].eval(n0);
      }
      out.trim();
    };
    eval_poly(a, a0);
    if (!pole) eval_poly(b, b0);
    if (pole) continue;
    if (a0.degree() != a.degree() || b0.degree() != b.degree()) continue;
    if (poly_gcd(a0, b0).degree() == 0) return Poly<K>(f_one<K>());
    break; // a nontrivial common factor is plausible; use the exact path
  }
  // exact Euclid fallback
  while (!b.is_zero()) {
    Poly<K> r = a % b;
    a = b;
    b = r;
  }
  return a.monic();
}

} // namespace scalform

#endif
