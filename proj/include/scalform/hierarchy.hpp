#ifndef SCALFORM_HIERARCHY_HPP
#define SCALFORM_HIERARCHY_HPP

#include <vector>
#include <array>
#include <map>
#include <stdexcept>
#include "scalform/fpseries.hpp"
#include "scalform/specialfun.hpp"
#include "scalform/operators.hpp"
#include "scalform/scaling.hpp"

namespace scalform {

// Reconstruction pipeline for the higher chain factors. The scaled sigma
// form holds for the whole particle expansion at once; expanding it in the
// counting parameter gives, level by level, a linear determination of each
// n-particle block. Guessing the block's annihilator mod p and dividing by
// the known lower chain isolates the next factor, whose small rational
// coefficients are lifted by rational reconstruction and then verified
// against exact data downstream.

// ---- log-polynomial coefficients over Fp -----------------------------------

struct Lp {
  std::vector<Fp> c; // coefficient of ln^j

  bool is_zero() const
  {
    for (auto& x : c)
      if (!x.is_zero()) return false;
    return true;
  }
  Fp get(int j) const { return j >= 0 && j < (int)c.size() ? c[j] : Fp{0}; }
  void set(int j, Fp v)
  {
    if (j >= (int)c.size()) c.resize(j + 1, Fp{0});
    c[j] = v;
  }
  void trim()
  {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  Lp& operator+=(const Lp& o)
  {
    if (o.c.size() > c.size()) c.resize(o.c.size(), Fp{0});
    for (size_t j = 0; j < o.c.size(); ++j) c[j] += o.c[j];
    return *this;
  }
  Lp& operator-=(const Lp& o)
  {
    if (o.c.size() > c.size()) c.resize(o.c.size(), Fp{0});
    for (size_t j = 0; j < o.c.size(); ++j) c[j] -= o.c[j];
    return *this;
  }
  friend Lp operator*(const Lp& a, const Lp& b)
  {
    Lp r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, Fp{0});
    for (size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i].is_zero()) continue;
      for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    return r;
  }
  Lp scaled(Fp f) const
  {
    Lp r = *this;
    for (auto& x : r.c) x = x * f;
    return r;
  }
  // action of x d/dx on the coefficient of x^k: k v_j + (j+1) v_{j+1}
  Lp theta(long k) const
  {
    Lp r;
    r.c.assign(c.size(), Fp{0});
    Fp kk = Fp::from_int(k);
    for (size_t j = 0; j < c.size(); ++j) {
      r.c[j] += c[j] * kk;
      if (j + 1 < c.size()) r.c[j] += c[j + 1] * Fp::from_int((long)j + 1);
    }
    r.trim();
    return r;
  }
};

// One lambda-graded series: per grade a vector over x-orders of Lp.
struct GradedSeries {
  int K = 0;
  std::vector<std::vector<Lp>> g; // g[grade][xorder]

  GradedSeries() = default;
  GradedSeries(int grades, int K_) : K(K_), g(grades)
  {
    for (auto& v : g) v.assign(K_, Lp{});
  }
  int grades() const { return (int)g.size(); }
  const Lp& at(int gr, int k) const
  {
    static const Lp z{};
    if (gr < 0 || gr >= grades() || k < 0 || k >= K) return z;
    return g[gr][k];
  }
};

// The scaled sigma-form hierarchy over Fp; grades are particle counts.
struct ScaledHierarchyFp {
  int K;       // x-orders tracked
  int GMAX;    // grades tracked (inclusive)
  GradedSeries F, A2, A3, B, Q, R, W;

  ScaledHierarchyFp(int xorders, int gmax)
      : K(xorders), GMAX(gmax), F(gmax + 1, xorders), A2(gmax + 1, xorders),
        A3(gmax + 1, xorders), B(gmax + 1, xorders), Q(gmax + 1, xorders),
        R(gmax + 1, xorders), W(gmax + 1, xorders)
  {
  }

  // A2[g][k] = sum_{g1+g2=g} sum_{a+b=k+1} [T_a(T_a F[g1][a]) F[g2][b]
  //                                         - T_a(F[g1][a]) T_b(F[g2][b])]
  void a2_at(int gr, int k)
  {
    Lp acc;
    for (int g1 = 0; g1 <= gr; ++g1) {
      int g2 = gr - g1;
      for (int a = 0; a <= k + 1; ++a) {
        int b = k + 1 - a;
        if (a >= K || b >= K) continue;
        const Lp& fa = F.at(g1, a);
        const Lp& fb = F.at(g2, b);
        if (fa.is_zero() || fb.is_zero()) continue;
        Lp ta = fa.theta(a);
        acc += ta.theta(a) * fb;
        acc -= ta * fb.theta(b);
      }
    }
    acc.trim();
    A2.g[gr][k] = std::move(acc);
  }
  // A3[g][k] = sum [T_a(A2[a]) F[b] - 2 A2[a] T_b(F[b])], a+b=k+1
  void a3_at(int gr, int k)
  {
    Lp acc;
    for (int g1 = 0; g1 <= gr; ++g1) {
      int g2 = gr - g1;
      for (int a = 0; a <= k + 1; ++a) {
        int b = k + 1 - a;
        if (a >= K || b >= K) continue;
        const Lp& aa = A2.at(g1, a);
        const Lp& fb = F.at(g2, b);
        if (aa.is_zero() || fb.is_zero()) continue;
        acc += aa.theta(a) * fb;
        Lp t = aa * fb.theta(b);
        acc -= t.scaled(Fp{2});
      }
    }
    acc.trim();
    A3.g[gr][k] = std::move(acc);
  }
  // B[g][k] = A2[g][k-1] - sum_{a+b=k} T_a(F[a]) F[b]
  void b_at(int gr, int k)
  {
    Lp acc;
    if (k >= 1) acc += A2.at(gr, k - 1);
    for (int g1 = 0; g1 <= gr; ++g1) {
      int g2 = gr - g1;
      for (int a = 0; a <= k; ++a) {
        int b = k - a;
        const Lp& fa = F.at(g1, a);
        const Lp& fb = F.at(g2, b);
        if (fa.is_zero() || fb.is_zero()) continue;
        acc -= fa.theta(a) * fb;
      }
    }
    acc.trim();
    B.g[gr][k] = std::move(acc);
  }
  static Lp conv_at(const GradedSeries& u, const GradedSeries& v, int gr, int k)
  {
    Lp acc;
    for (int g1 = 0; g1 <= gr; ++g1) {
      int g2 = gr - g1;
      for (int a = 0; a <= k; ++a) {
        const Lp& ua = u.at(g1, a);
        const Lp& vb = v.at(g2, k - a);
        if (ua.is_zero() || vb.is_zero()) continue;
        acc += ua * vb;
      }
    }
    acc.trim();
    return acc;
  }
  void qrw_at(int gr, int k)
  {
    Q.g[gr][k] = conv_at(A2, A2, gr, k);
    R.g[gr][k] = conv_at(F, F, gr, k);
    W.g[gr][k] = conv_at(B, B, gr, k);
  }

  void recompute(int gmin, int k0, int k1)
  {
    k0 = std::max(0, k0);
    for (int gr = gmin; gr <= GMAX; ++gr)
      for (int k = std::max(0, k0 - 1); k <= k1 + 1 && k < K; ++k) a2_at(gr, k);
    for (int gr = gmin; gr <= GMAX; ++gr)
      for (int k = k0; k <= k1 && k < K; ++k) {
        a3_at(gr, k);
        b_at(gr, k);
        qrw_at(gr, k);
      }
  }

  // E[g][w] = (A3*A3)[g][w-2] + 4 (B*Q)[g][w] - (R*Q)[g][w] - (W*R)[g][w]
  Lp E_at(int gr, int w)
  {
    Lp acc;
    if (w >= 2) acc += conv_at(A3, A3, gr, w - 2);
    Lp bq = conv_at(B, Q, gr, w);
    acc += bq.scaled(Fp{4});
    acc -= conv_at(R, Q, gr, w);
    acc -= conv_at(W, R, gr, w);
    acc.trim();
    return acc;
  }

  // Solve the level at grade m: F[m] determined order by order so that the
  // residual at grade m + read_offset vanishes. Components that stay free
  // are set to zero (any member of the family carries the same annihilating
  // chain). Lower levels must already be installed and consistent.
  void solve_level(int m, int read_grade, int lmax)
  {
    int cleared = -1;
    for (int t = 0; t < K - 10; ++t) {
      // unknown l-components of F[m][t]
      int comps = lmax + 1;
      F.g[m][t] = Lp{};
      recompute(m, t - 2, t);
      // find the first residual order influenced by these components
      for (int w = std::max(cleared + 1, 0); w <= t + 8 && w + 2 < K; ++w) {
        recompute(m, t + 1, w);
        Lp e0 = E_at(read_grade, w);
        // probe each component
        std::vector<Lp> cols(comps);
        bool any = false;
        for (int j = 0; j < comps; ++j) {
          Lp probe;
          probe.set(j, Fp{1});
          F.g[m][t] = probe;
          recompute(m, t - 2, w);
          Lp ej = E_at(read_grade, w);
          ej -= e0;
          cols[j] = ej;
          if (!cols[j].is_zero()) any = true;
        }
        F.g[m][t] = Lp{};
        recompute(m, t - 2, w);
        if (!any) {
          if (!e0.is_zero()) throw std::runtime_error("hierarchy obstruction at level");
          cleared = w;
          continue;
        }
        // linear solve: rows = l-components of the residual
        int jrows = 0;
        for (auto& col : cols) jrows = std::max(jrows, (int)col.c.size());
        jrows = std::max(jrows, (int)e0.c.size());
        Mat<Fp> Amat(jrows, comps);
        std::vector<Fp> rhs(jrows, Fp{0});
        for (int j = 0; j < comps; ++j)
          for (int r = 0; r < jrows; ++r) Amat(r, j) = cols[j].get(r);
        for (int r = 0; r < jrows; ++r) rhs[r] = Fp{0} - e0.get(r);
        std::vector<Fp> sol;
        if (!solve_linear(Amat, rhs, sol))
          throw std::runtime_error("hierarchy level system inconsistent");
        Lp val;
        for (int j = 0; j < comps; ++j)
          if (!sol[j].is_zero()) val.set(j, sol[j]);
        F.g[m][t] = val;
        recompute(m, t - 2, w);
        if (!E_at(read_grade, w).is_zero())
          throw std::runtime_error("hierarchy level residual did not clear");
        cleared = w;
        break;
      }
    }
  }
};

// ---- annihilator guessing for a log-bearing series mod p -------------------

// Find the minimal homogeneous-derivative operator sum m_{q,d} x^d theta^q
// annihilating the series block (coefficients Lp per x-order). Returns the
// operator in the plain-derivative basis over Fp.
inline DiffOp<Fp> annihilator_mod_p(const std::vector<Lp>& series, int qmax, int dmax,
                                    int dstep = 2)
{
  int n = (int)series.size();
  int lmax = 0;
  for (auto& s : series) lmax = std::max(lmax, (int)s.c.size());
  // theta powers
  std::vector<std::vector<Lp>> tp(qmax + 1, std::vector<Lp>(n));
  tp[0] = series;
  for (int q = 1; q <= qmax; ++q)
    for (int k = 0; k < n; ++k) tp[q][k] = tp[q - 1][k].theta(k);
  int ncols = (qmax + 1) * (dmax / dstep + 1);
  // rows: (x-order, l) pairs; use enough rows with margin
  std::vector<std::pair<int, int>> rows;
  for (int k = 0; k < n && (int)rows.size() < ncols + 40; k += 1)
    for (int j = 0; j < lmax; ++j) {
      rows.push_back({k, j});
      if ((int)rows.size() >= ncols + 40) break;
    }
  Mat<Fp> M((int)rows.size(), ncols);
  std::vector<std::pair<int, int>> cells;
  int cidx = 0;
  for (int d = 0; d <= dmax; d += dstep)
    for (int q = 0; q <= qmax; ++q, ++cidx) {
      cells.push_back({q, d});
      for (size_t r = 0; r < rows.size(); ++r) {
        auto [k, j] = rows[r];
        if (k >= d) M((int)r, cidx) = tp[q][k - d].get(j);
      }
    }
  auto null = nullspace(M);
  if (null.empty()) throw std::runtime_error("no annihilator within the budget");
  // verify the first kernel vector against all rows
  auto& vec = null.front();
  for (int k = 0; k < n; ++k) {
    Lp acc;
    for (int c = 0; c < ncols; ++c) {
      if (f_is_zero(vec[c])) continue;
      auto [q, d] = cells[c];
      if (k >= d) acc += tp[q][k - d].scaled(vec[c]);
    }
    if (!acc.is_zero()) throw std::runtime_error("spurious annihilator candidate");
  }
  // assemble sum m x^d theta^q as a theta-basis operator
  int max_theta = 0;
  for (int c = 0; c < ncols; ++c)
    if (!f_is_zero(vec[c])) max_theta = std::max(max_theta, cells[c].first);
  std::vector<RatFunc<Fp>> coeffs(max_theta + 1);
  for (int c = 0; c < ncols; ++c) {
    if (f_is_zero(vec[c])) continue;
    auto [q, d] = cells[c];
    coeffs[q] += RatFunc<Fp>(Poly<Fp>::monomial(vec[c], d));
  }
  DiffOp<Fp> theta_op("x", std::move(coeffs), DiffOp<Fp>::Basis::ThetaD);
  return to_plain_basis(theta_op);
}

} // namespace scalform

#endif
