#ifndef SCALFORM_POLY_HPP
#define SCALFORM_POLY_HPP

#include <vector>
#include <stdexcept>
#include <string>
#include <algorithm>
#include "scalform/bigrat.hpp"
#include "scalform/fp.hpp"

namespace scalform {

template <class K> inline K f_zero() { return K(0); }
template <class K> inline K f_one() { return K(1); }
template <class K> inline bool f_is_zero(const K& x) { return x == K(0); }

template <> inline Fp f_zero<Fp>() { return Fp{0}; }
template <> inline Fp f_one<Fp>() { return Fp{1 % Fp::modulus()}; }
template <> inline bool f_is_zero<Fp>(const Fp& x) { return x.v == 0; }

template <class K> inline K f_inv(const K& x) { return f_one<K>() / x; }

// Conversion from exact rationals into any coefficient ring; specialized per
// type so nested towers (extensions over rational functions etc.) embed.
template <class C>
struct FromRat {
  static C get(const Rat& q) { return C(q); }
};
template <>
struct FromRat<Rat> {
  static Rat get(const Rat& q) { return q; }
};
template <>
struct FromRat<Fp> {
  static Fp get(const Rat& q) { return reduce_mod_p(q, Fp::modulus()); }
};
template <class C>
inline C c_from_rat(const Rat& q)
{
  return FromRat<C>::get(q);
}

// Dense univariate polynomial over a field K, coefficients ascending.
// The variable name is contextual; Poly itself is unnamed.
template <class K>
struct Poly {
  std::vector<K> c;

  Poly() = default;
  explicit Poly(K k)
  {
    if (!f_is_zero(k)) c.push_back(k);
  }
  Poly(std::initializer_list<K> list) : c(list) { trim(); }

  static Poly monomial(K k, int deg)
  {
    Poly p;
    if (f_is_zero(k)) return p;
    p.c.assign(deg + 1, f_zero<K>());
    p.c[deg] = k;
    return p;
  }
  static Poly x() { return monomial(f_one<K>(), 1); }

  void trim()
  {
    while (!c.empty() && f_is_zero(c.back())) c.pop_back();
  }
  int degree() const { return (int)c.size() - 1; } // -1 for zero
  bool is_zero() const { return c.empty(); }
  const K& operator[](int i) const
  {
    static const K z = f_zero<K>();
    return (i >= 0 && i < (int)c.size()) ? c[i] : z;
  }
  K& coeff(int i)
  {
    if (i >= (int)c.size()) c.resize(i + 1, f_zero<K>());
    return c[i];
  }
  K lead() const
  {
    if (is_zero()) throw std::domain_error("lead of zero polynomial");
    return c.back();
  }

  friend Poly operator+(const Poly& a, const Poly& b)
  {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), f_zero<K>());
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
    r.trim();
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b)
  {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), f_zero<K>());
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] - b.c[i];
    r.trim();
    return r;
  }
  Poly operator-() const
  {
    Poly r = *this;
    for (auto& k : r.c) k = -k;
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b)
  {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, f_zero<K>());
    for (size_t i = 0; i < a.c.size(); ++i) {
      if (f_is_zero(a.c[i])) continue;
      for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.trim();
    return r;
  }
  friend Poly operator*(const Poly& a, const K& k)
  {
    Poly r = a;
    for (auto& x : r.c) x = x * k;
    r.trim();
    return r;
  }
  friend Poly operator*(const K& k, const Poly& a) { return a * k; }
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }
  friend bool operator==(const Poly& a, const Poly& b)
  {
    if (a.c.size() != b.c.size()) return false;
    for (size_t i = 0; i < a.c.size(); ++i)
      if (!(a.c[i] == b.c[i])) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Euclidean division; K must be a field.
  static void divrem(const Poly& a, const Poly& b, Poly& q, Poly& r)
  {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    q = Poly();
    r = a;
    K binv = f_inv(b.lead());
    while (!r.is_zero() && r.degree() >= b.degree()) {
      int d = r.degree() - b.degree();
      K f = r.lead() * binv;
      q.coeff(d) = q[d] + f;
      for (int i = 0; i <= b.degree(); ++i) r.coeff(i + d) = r[i + d] - f * b[i];
      r.trim();
    }
    q.trim();
  }
  friend Poly operator/(const Poly& a, const Poly& b)
  {
    Poly q, r;
    divrem(a, b, q, r);
    return q;
  }
  friend Poly operator%(const Poly& a, const Poly& b)
  {
    Poly q, r;
    divrem(a, b, q, r);
    return r;
  }

  Poly derivative() const
  {
    Poly r;
    if (degree() < 1) return r;
    r.c.resize(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) r.c[i - 1] = c[i] * K((long)i);
    r.trim();
    return r;
  }

  K eval(const K& x) const
  {
    K r = f_zero<K>();
    for (int i = degree(); i >= 0; --i) r = r * x + c[i];
    return r;
  }

  // Substitute x -> a + b*x.
  Poly compose_affine(const K& a, const K& b) const
  {
    Poly r;
    Poly lin;
    lin.coeff(0) = a;
    lin.coeff(1) = b;
    lin.trim();
    for (int i = degree(); i >= 0; --i) {
      r = r * lin;
      r.coeff(0) = r[0] + c[i];
      r.trim();
    }
    return r;
  }

  Poly shift_up(int k) const // multiply by x^k
  {
    if (is_zero()) return Poly();
    Poly r;
    r.c.assign(c.size() + k, f_zero<K>());
    for (size_t i = 0; i < c.size(); ++i) r.c[i + k] = c[i];
    return r;
  }

  Poly monic() const
  {
    if (is_zero()) return *this;
    K li = f_inv(lead());
    return *this * li;
  }
};

template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b)
{
  while (!b.is_zero()) {
    Poly<K> r = a % b;
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  return a.monic();
}

inline Rat rat_content(const Poly<Rat>& p);

// Rational coefficients: primitive pseudo-remainder sequence over the
// integers (monic Euclid over Q blows up coefficient heights).
inline Poly<Rat> poly_gcd(Poly<Rat> a, Poly<Rat> b)
{
  if (a.is_zero() && b.is_zero()) return a;
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  auto to_int = [](const Poly<Rat>& p) {
    std::vector<Int> v(p.degree() + 1);
    Rat c = rat_content(p);
    for (int i = 0; i <= p.degree(); ++i) v[i] = Rat(p[i] / c).get_num();
    return v;
  };
  auto strip = [](std::vector<Int>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    if (v.empty()) return;
    Int g(0);
    for (auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
      for (auto& x : v) x /= g;
  };
  std::vector<Int> A = to_int(a), B = to_int(b);
  if (A.size() < B.size()) std::swap(A, B);
  while (!B.empty()) {
    std::vector<Int> R = A;
    const Int lb = B.back();
    while (R.size() >= B.size()) {
      Int lr = R.back();
      size_t off = R.size() - B.size();
      for (size_t i = 0; i < R.size(); ++i) R[i] *= lb;
      for (size_t i = 0; i < B.size(); ++i) R[off + i] -= lr * B[i];
      while (!R.empty() && R.back() == 0) R.pop_back();
      strip(R);
    }
    A = std::move(B);
    B = std::move(R);
  }
  Poly<Rat> g;
  for (size_t i = 0; i < A.size(); ++i) g.coeff((int)i) = Rat(A[i]);
  g.trim();
  return g.monic();
}

template <class K>
Poly<K> poly_pow(const Poly<K>& a, unsigned e)
{
  Poly<K> r(f_one<K>());
  Poly<K> base = a;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

// Content (gcd of coefficients) and primitive part for rational coefficients:
// returns c such that poly/c has coprime integer coefficients with positive lead.
inline Rat rat_content(const Poly<Rat>& p)
{
  if (p.is_zero()) return Rat(1);
  Int g(0), l(1);
  for (auto& q : p.c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
  }
  Rat c = rat(g, l);
  if (p.lead() < 0) c = -c;
  return c;
}

// Rational roots with multiplicity by bounded candidate probing on the
// primitive integer form (roots of indicial polynomials are small here).
// Remaining (irrational/complex/out-of-bound) factor returned via residual.
inline std::vector<std::pair<Rat, int>> rational_roots(Poly<Rat> p, Poly<Rat>* residual = nullptr,
                                                       long num_bound = 4096, long den_bound = 64)
{
  std::vector<std::pair<Rat, int>> roots;
  if (p.is_zero()) return roots;
  int val = 0;
  while (val <= p.degree() && p[val] == 0) ++val;
  if (val > 0) {
    Poly<Rat> q;
    q.c.assign(p.c.begin() + val, p.c.end());
    p = q;
    roots.push_back({Rat(0), val});
  }
  while (p.degree() >= 1) {
    p = p * (Rat(1) / rat_content(p)); // coprime integer coefficients
    bool found = false;
    for (long q = 1; q <= den_bound && !found; ++q) {
      if (p.lead().get_num() % Int(q) != 0) continue;
      for (long n = 1; n <= num_bound && !found; ++n) {
        if (p[0].get_num() % Int(n) != 0) continue;
        Rat cand = rat(n, q);
        if (cand.get_den() != q) continue; // coprime pairs only, visited once
        for (int s : {1, -1}) {
          Rat r = s > 0 ? cand : -cand;
          if (p.eval(r) != 0) continue;
          Poly<Rat> lin;
          lin.coeff(0) = -r;
          lin.coeff(1) = Rat(1);
          lin.trim();
          int mult = 0;
          while (p.degree() >= 1 && p.eval(r) == 0) {
            p = p / lin;
            ++mult;
          }
          roots.push_back({r, mult});
          found = true;
          break;
        }
      }
    }
    if (!found) break;
  }
  if (residual) *residual = p;
  return roots;
}

} // namespace scalform

#endif
