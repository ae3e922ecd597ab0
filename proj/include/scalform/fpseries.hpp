#ifndef SCALFORM_FPSERIES_HPP
#define SCALFORM_FPSERIES_HPP

#include <vector>
#include <stdexcept>
#include "scalform/fp.hpp"
#include "scalform/poly.hpp"

namespace scalform {

// Mod-p generator of the even one-parameter family at exponent 1/4:
// solves the scaled sigma-form term by term for S = 1 + a2 x^2 + ..., using
// the division-free polynomial form
//   E = x^2 A3^2 + 4 B A2^2 - S^2 A2^2 - B^2 S^2,
//   P = x S', A2 = P'S - PS', A3 = A2'S - 2S'A2, B = x A2 - P S,
// everything expressed as convolutions in the coefficients of S.
struct EvenFamilyFp {
  int K;                 // number of x-orders tracked
  std::vector<Fp> S, A2, A3, B, Q, R, W;
  int sv = -1;           // S valid through this x-order

  explicit EvenFamilyFp(int xorders) : K(xorders)
  {
    S.assign(K, Fp{0});
    A2.assign(K, Fp{0});
    A3.assign(K, Fp{0});
    B.assign(K, Fp{0});
    Q.assign(K, Fp{0});
    R.assign(K, Fp{0});
    W.assign(K, Fp{0});
  }

  // staged recomputation: A2 first (it feeds everything else with a
  // one-step lookahead), then the dependent arrays
  void a2_at(int k)
  {
    auto s = [&](int i) { return (i >= 0 && i < K) ? S[i] : Fp{0}; };
    Fp a2{0};
    for (int a = 0; 2 * a < k + 1; ++a) {
      int b = k + 1 - a;
      if (b >= K) continue;
      if (s(a).is_zero() || s(b).is_zero()) continue;
      long d = b - a;
      a2 += s(a) * s(b) * Fp::from_int(d * d);
    }
    A2[k] = a2;
  }
  void rest_at(int k)
  {
    auto s = [&](int i) { return (i >= 0 && i < K) ? S[i] : Fp{0}; };
    Fp a3{0};
    for (int a = 0; a <= k + 1 && a < K; ++a) {
      int b = k + 1 - a;
      if (b >= K) continue;
      if (A2[a].is_zero() || s(b).is_zero()) continue;
      a3 += A2[a] * s(b) * Fp::from_int((long)a - 2L * b);
    }
    A3[k] = a3;
    Fp b{0};
    if (k >= 1) b = A2[k - 1];
    for (int i = 1; i <= k; ++i) {
      if (s(i).is_zero() || s(k - i).is_zero()) continue;
      b -= s(i) * s(k - i) * Fp::from_int(i);
    }
    B[k] = b;
    auto conv = [&](const std::vector<Fp>& u, const std::vector<Fp>& v) {
      Fp acc{0};
      for (int i = 0; i <= k; ++i)
        if (!u[i].is_zero() && !v[k - i].is_zero()) acc += u[i] * v[k - i];
      return acc;
    };
    Q[k] = conv(A2, A2);
    R[k] = conv(S, S);
    W[k] = conv(B, B);
  }
  void recompute(int k0, int k1)
  {
    k0 = std::max(0, k0);
    for (int k = std::max(0, k0 - 1); k <= k1 + 1 && k < K; ++k) a2_at(k);
    for (int k = k0; k <= k1 && k < K; ++k) rest_at(k);
  }

  Fp E_at(int w)
  {
    auto conv_at = [&](const std::vector<Fp>& u, const std::vector<Fp>& v, int k) {
      Fp acc{0};
      if (k < 0) return acc;
      for (int i = 0; i <= k; ++i)
        if (!u[i].is_zero() && !v[k - i].is_zero()) acc += u[i] * v[k - i];
      return acc;
    };
    Fp e = conv_at(A3, A3, w - 2);
    e += conv_at(B, Q, w) * Fp::from_int(4);
    e -= conv_at(R, Q, w);
    e -= conv_at(W, R, w);
    return e;
  }

  // generate the family with the given residue of a2; returns coefficients
  // of x^0, x^2, x^4, ... (length nterms). Throws BadPrime on zero pivots.
  std::vector<Fp> generate(Fp a2res, int nterms)
  {
    if (2 * nterms + 10 > K) throw std::invalid_argument("window too small");
    S[0] = Fp{1};
    S[2] = a2res;
    sv = 3; // S known through x^3 (odd entries zero)
    recompute(0, 3);
    int cleared = -1;
    int t = 4; // next unknown even slot
    while (t < 2 * nterms) {
      // extend S with a zero guess at slot t (odd slot t+1 is truly zero)
      S[t] = Fp{0};
      sv = t + 1;
      recompute(t - 2, t);
      // scan residual orders for the first one influenced by S[t]
      bool solved = false;
      for (int w = std::max(cleared + 1, t); w <= t + 8 && w + 1 < K; ++w) {
        recompute(t + 1, w);
        Fp e0 = E_at(w);
        // probe S[t] = 1
        S[t] = Fp{1};
        recompute(t - 2, w);
        Fp e1 = E_at(w);
        Fp d = e1 - e0;
        // restore S[t] = 0 baseline
        S[t] = Fp{0};
        recompute(t - 2, w);
        if (!d.is_zero()) {
          Fp val = (Fp{0} - e0) / d;
          S[t] = val;
          recompute(t - 2, w);
          if (!E_at(w).is_zero()) throw std::runtime_error("family step not linear");
          cleared = w;
          solved = true;
          break;
        }
        if (!e0.is_zero()) throw std::runtime_error("family obstruction");
        cleared = w;
      }
      // a vanishing linear coefficient with clean residuals marks a free
      // coefficient of a degenerate sub-family; take the natural member
      if (!solved) {
        S[t] = Fp{0};
        recompute(t - 2, std::min(cleared, K - 1));
      }
      t += 2;
    }
    std::vector<Fp> out(nterms);
    for (int j = 0; j < nterms; ++j) out[j] = S[2 * j];
    return out;
  }
};

// ---- Fp[x] helpers for interpolation/reconstruction ------------------------

inline Fp fp_eval(const Poly<Fp>& p, Fp x)
{
  Fp r{0};
  for (int i = p.degree(); i >= 0; --i) r = r * x + p[i];
  return r;
}

// Newton interpolation through (xs, ys).
inline Poly<Fp> fp_interpolate(const std::vector<Fp>& xs, const std::vector<Fp>& ys)
{
  int n = (int)xs.size();
  std::vector<Fp> dd = ys; // divided differences
  for (int level = 1; level < n; ++level)
    for (int i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
  Poly<Fp> p;
  for (int i = n - 1; i >= 0; --i) {
    // p = p * (x - xs[i]) + dd[i]
    Poly<Fp> lin;
    lin.coeff(0) = Fp{0} - xs[i];
    lin.coeff(1) = Fp{1};
    lin.trim();
    p = p * lin;
    p.coeff(0) = p[0] + dd[i];
    p.trim();
  }
  return p;
}

// Rational function reconstruction over Fp[x]: find num/den with
// deg num <= dn, deg den <= dd, num = den * f mod M. Standard half-Euclid.
inline bool fp_ratfunc_reconstruct(const Poly<Fp>& f, const Poly<Fp>& M, int dn, int dd,
                                   Poly<Fp>& num, Poly<Fp>& den)
{
  Poly<Fp> r0 = M, r1 = f % M;
  Poly<Fp> s0, s1(Fp{1});
  while (!r1.is_zero() && r1.degree() > dn) {
    Poly<Fp> q = r0 / r1;
    Poly<Fp> r2 = r0 - q * r1;
    Poly<Fp> s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  if (s1.is_zero() || s1.degree() > dd) return false;
  num = r1;
  den = s1;
  if (!den.is_zero()) {
    Fp l = den.lead().inv();
    num = num * l;
    den = den * l;
  }
  return !den.is_zero();
}

} // namespace scalform

#endif
