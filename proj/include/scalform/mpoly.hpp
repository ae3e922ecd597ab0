#ifndef SCALFORM_MPOLY_HPP
#define SCALFORM_MPOLY_HPP

#include <map>
#include <array>
#include <cstdint>
#include "scalform/bigrat.hpp"
#include "scalform/poly.hpp"

namespace scalform {

// Small sparse multivariate polynomial over K with at most V variables.
// Used for symbolic constants (c1, c2, ...) and for polynomial identities
// in a handful of jet variables; not a performance structure.
template <class K, int V>
struct MPoly {
  using Exp = std::array<uint16_t, V>;
  std::map<Exp, K> t;

  MPoly() = default;
  MPoly(int k) { set_const(K(k)); }
  explicit MPoly(const K& k) { set_const(k); }

  void set_const(const K& k)
  {
    t.clear();
    if (!f_is_zero(k)) t[Exp{}] = k;
  }
  static MPoly var(int i, const K& coeff = f_one<K>())
  {
    MPoly p;
    Exp e{};
    e[i] = 1;
    if (!f_is_zero(coeff)) p.t[e] = coeff;
    return p;
  }
  bool is_zero() const { return t.empty(); }

  void add_term(const Exp& e, const K& k)
  {
    auto it = t.find(e);
    if (it == t.end()) {
      if (!f_is_zero(k)) t[e] = k;
    } else {
      it->second += k;
      if (f_is_zero(it->second)) t.erase(it);
    }
  }

  friend MPoly operator+(const MPoly& a, const MPoly& b)
  {
    MPoly r = a;
    for (auto& [e, k] : b.t) r.add_term(e, k);
    return r;
  }
  friend MPoly operator-(const MPoly& a, const MPoly& b)
  {
    MPoly r = a;
    for (auto& [e, k] : b.t) r.add_term(e, -k);
    return r;
  }
  MPoly operator-() const
  {
    MPoly r;
    for (auto& [e, k] : t) r.t[e] = -k;
    return r;
  }
  friend MPoly operator*(const MPoly& a, const MPoly& b)
  {
    MPoly r;
    for (auto& [ea, ka] : a.t)
      for (auto& [eb, kb] : b.t) {
        Exp e;
        for (int i = 0; i < V; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ka * kb);
      }
    return r;
  }
  friend MPoly operator*(const MPoly& a, const K& k)
  {
    MPoly r;
    if (f_is_zero(k)) return r;
    for (auto& [e, ka] : a.t) r.t[e] = ka * k;
    return r;
  }
  MPoly& operator+=(const MPoly& b) { return *this = *this + b; }
  MPoly& operator-=(const MPoly& b) { return *this = *this - b; }
  MPoly& operator*=(const MPoly& b) { return *this = *this * b; }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.t == b.t; }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a.t == b.t); }
};

template <class K, int V>
struct FromRat<MPoly<K, V>> {
  static MPoly<K, V> get(const Rat& q) { return MPoly<K, V>(FromRat<K>::get(q)); }
};

} // namespace scalform

#endif
