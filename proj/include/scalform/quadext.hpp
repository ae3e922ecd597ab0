#ifndef SCALFORM_QUADEXT_HPP
#define SCALFORM_QUADEXT_HPP

#include "scalform/poly.hpp"

namespace scalform {

// Quadratic extension K[s]/(s^2 - d): elements a + b*s.
// One adjoined square root covers every radical relation used here;
// Gaussian rationals are the d = -1 case.
template <class K>
struct QuadExt {
  K a, b, d;

  QuadExt() : a(f_zero<K>()), b(f_zero<K>()), d(f_zero<K>()) {}
  QuadExt(int k) : a(K(k)), b(f_zero<K>()), d(f_zero<K>()) {}
  QuadExt(K a_, K b_, K d_) : a(a_), b(b_), d(d_) {}
  static QuadExt root(const K& d)
  {
    return QuadExt(f_zero<K>(), f_one<K>(), d);
  }

  bool is_zero() const { return f_is_zero(a) && f_is_zero(b); }

  static K join(const K& x, const K& y, const char* what)
  {
    if (f_is_zero(x)) return y;
    if (f_is_zero(y)) return x;
    if (!(x == y)) throw std::domain_error(std::string("QuadExt: mixed radicands in ") + what);
    return x;
  }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y)
  {
    return QuadExt(x.a + y.a, x.b + y.b, join(x.d, y.d, "+"));
  }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y)
  {
    return QuadExt(x.a - y.a, x.b - y.b, join(x.d, y.d, "-"));
  }
  QuadExt operator-() const { return QuadExt(-a, -b, d); }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y)
  {
    K dd = join(x.d, y.d, "*");
    return QuadExt(x.a * y.a + x.b * y.b * dd, x.a * y.b + x.b * y.a, dd);
  }
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y)
  {
    K dd = join(x.d, y.d, "/");
    K n = y.a * y.a - y.b * y.b * dd; // field norm
    if (f_is_zero(n)) throw std::domain_error("QuadExt: division by zero divisor");
    K ni = f_inv(n);
    QuadExt conj(y.a, -y.b, dd);
    QuadExt num = x * conj;
    return QuadExt(num.a * ni, num.b * ni, dd);
  }
  QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
  QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
  QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
  friend bool operator==(const QuadExt& x, const QuadExt& y)
  {
    return x.a == y.a && x.b == y.b && (f_is_zero(x.b) || f_is_zero(y.b) || x.d == y.d);
  }
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }
};

template <class K>
struct FromRat<QuadExt<K>> {
  static QuadExt<K> get(const Rat& q)
  {
    return QuadExt<K>(FromRat<K>::get(q), f_zero<K>(), f_zero<K>());
  }
};

} // namespace scalform

#endif
