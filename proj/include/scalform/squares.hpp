#ifndef SCALFORM_SQUARES_HPP
#define SCALFORM_SQUARES_HPP

#include <vector>
#include <utility>
#include <map>
#include <functional>
#include <algorithm>
#include "scalform/diffop.hpp"

namespace scalform {

// Symmetric and exterior squares by the derivative-closure method: work in
// the module spanned by u^(i) v^(j) (+ or - transposition symmetry), reduce
// the top derivative with the companion relation, and find the first linear
// dependency among the derivatives of the generator. Everything is kept
// fraction-free: vectors are polynomial with a tracked power of the leading
// coefficient, and the elimination uses cross-multiplied rows.

namespace detail {

struct PairBasis {
  int n = 0;
  bool symmetric = true;
  std::vector<std::pair<int, int>> idx; // ordered (i <= j) or (i < j)
  std::vector<std::vector<int>> pos;    // [i][j] -> basis slot

  PairBasis(int n_, bool symmetric_) : n(n_), symmetric(symmetric_)
  {
    pos.assign(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i)
      for (int j = symmetric ? i : i + 1; j < n; ++j) {
        pos[i][j] = (int)idx.size();
        idx.push_back({i, j});
      }
  }
  int dim() const { return (int)idx.size(); }
};

} // namespace detail

// Derivative closure of the square module. Returns the polynomial vectors
// w_0..w_maxsteps with true vector v_k = w_k / lead^k, plus the basis.
template <class K>
struct SquareClosure {
  detail::PairBasis basis;
  Poly<K> lead;
  std::vector<std::vector<Poly<K>>> w;

  SquareClosure(int n, bool symmetric) : basis(n, symmetric) {}
};

template <class K>
SquareClosure<K> square_closure(const DiffOp<K>& op0, bool symmetric, int maxsteps)
{
  DiffOp<K> op = to_plain_basis(op0);
  int n = op.order();
  if (n < 2) throw std::invalid_argument("square of an operator of order < 2");
  PolyOp<K> P = to_polyop(op);
  SquareClosure<K> cl(n, symmetric);
  cl.lead = P.p[n];
  auto& B = cl.basis;
  int m = B.dim();

  // derivative of basis vector e_{ij} scaled by lead:
  //   lead * d e_{ij} = lead (e_{i+1,j} + e_{i,j+1}) with the reduction
  //   e_{n,j} = -sum_k (p_k/lead) e_{k,j}.
  auto add_pair = [&](std::vector<Poly<K>>& out, int i, int j, const Poly<K>& f) {
    if (f.is_zero()) return;
    auto put = [&](int a, int b, const Poly<K>& g) {
      if (B.symmetric) {
        if (a > b) std::swap(a, b);
        out[B.pos[a][b]] += g;
      } else {
        if (a == b) return;
        if (a < b)
          out[B.pos[a][b]] += g;
        else
          out[B.pos[b][a]] -= g;
      }
    };
    if (i < n && j < n) {
      put(i, j, f);
      return;
    }
    if (i == n) {
      for (int k = 0; k < n; ++k)
        if (k < (int)P.p.size() && !P.p[k].is_zero()) put(k, j, -(f * P.p[k]) /* over lead */);
      return;
    }
    // j == n
    for (int k = 0; k < n; ++k)
      if (k < (int)P.p.size() && !P.p[k].is_zero()) put(i, k, -(f * P.p[k]));
  };

  // w_0 = e_{0,0} (symmetric) or e_{0,1} (alternating)
  std::vector<Poly<K>> w0(m);
  w0[symmetric ? B.pos[0][0] : B.pos[0][1]] = Poly<K>(f_one<K>());
  cl.w.push_back(std::move(w0));
  Poly<K> dlead = cl.lead.derivative();
  for (int step = 1; step <= maxsteps; ++step) {
    auto& prev = cl.w.back();
    std::vector<Poly<K>> cur(m);
    // w' part: (w/lead^k)' = (w' lead - k w lead')/lead^(k+1)
    for (int s = 0; s < m; ++s) {
      if (prev[s].is_zero()) continue;
      cur[s] += prev[s].derivative() * cl.lead - prev[s] * dlead * K((long)(step - 1));
    }
    // module derivation: lead * A acting on prev
    for (int s = 0; s < m; ++s) {
      if (prev[s].is_zero()) continue;
      auto [i, j] = B.idx[s];
      // e_{i+1,j}: multiply by lead unless it hits the reduction
      if (i + 1 < n && j < n) {
        std::vector<Poly<K>> tmp(m);
        add_pair(tmp, i + 1, j, prev[s]);
        for (int t = 0; t < m; ++t)
          if (!tmp[t].is_zero()) cur[t] += tmp[t] * cl.lead;
      } else if (i + 1 == n) {
        std::vector<Poly<K>> tmp(m);
        add_pair(tmp, n, j, prev[s]); // already carries 1/lead
        for (int t = 0; t < m; ++t)
          if (!tmp[t].is_zero()) cur[t] += tmp[t];
      }
      if (j + 1 < n) {
        std::vector<Poly<K>> tmp(m);
        add_pair(tmp, i, j + 1, prev[s]);
        for (int t = 0; t < m; ++t)
          if (!tmp[t].is_zero()) cur[t] += tmp[t] * cl.lead;
      } else {
        std::vector<Poly<K>> tmp(m);
        add_pair(tmp, i, n, prev[s]);
        for (int t = 0; t < m; ++t)
          if (!tmp[t].is_zero()) cur[t] += tmp[t];
      }
    }
    cl.w.push_back(std::move(cur));
  }
  return cl;
}

// Fraction-free echelon with an augmented combination part; returns the
// first dependency combination (coefficients in K[x]) or empty if none.
template <class K>
std::vector<Poly<K>> first_dependency(const std::vector<std::vector<Poly<K>>>& vectors, int dim)
{
  struct Row {
    std::vector<Poly<K>> v;     // length dim
    std::vector<Poly<K>> combo; // coefficients in the original vectors
  };
  std::vector<Row> rows;
  std::vector<int> pivots;
  auto strip = [&](Row& row) {
    Poly<K> g;
    for (auto& q : row.v) {
      if (q.is_zero()) continue;
      g = g.is_zero() ? q : poly_gcd(g, q);
      if (g.degree() == 0) return;
    }
    for (auto& q : row.combo) {
      if (q.is_zero()) continue;
      g = g.is_zero() ? q : poly_gcd(g, q);
      if (g.degree() == 0) return;
    }
    if (g.degree() < 1) return;
    for (auto& q : row.v)
      if (!q.is_zero()) q = q / g;
    for (auto& q : row.combo)
      if (!q.is_zero()) q = q / g;
  };
  for (size_t r = 0; r < vectors.size(); ++r) {
    Row cur;
    cur.v = vectors[r];
    cur.combo.assign(vectors.size(), Poly<K>());
    cur.combo[r] = Poly<K>(f_one<K>());
    // reduce against existing rows
    for (size_t e = 0; e < rows.size(); ++e) {
      int pc = pivots[e];
      if (cur.v[pc].is_zero()) continue;
      Poly<K> a = rows[e].v[pc];
      Poly<K> b = cur.v[pc];
      Poly<K> g = poly_gcd(a, b);
      if (g.degree() > 0) {
        a = a / g;
        b = b / g;
      }
      for (int t = 0; t < dim; ++t) cur.v[t] = cur.v[t] * a - rows[e].v[t] * b;
      for (size_t t = 0; t < cur.combo.size(); ++t)
        cur.combo[t] = cur.combo[t] * a - rows[e].combo[t] * b;
    }
    strip(cur);
    int pc = -1;
    for (int t = 0; t < dim; ++t)
      if (!cur.v[t].is_zero()) { pc = t; break; }
    if (pc < 0) {
      std::vector<Poly<K>> combo(cur.combo.begin(), cur.combo.begin() + r + 1);
      return combo;
    }
    rows.push_back(std::move(cur));
    pivots.push_back(pc);
  }
  return {};
}

// Minimal operator annihilating all pairwise products (symmetric) or
// Wronskian pairings (alternating) of solutions. Order drops are reported
// through the returned order versus the module dimension.
template <class K>
DiffOp<K> square_operator(const DiffOp<K>& op0, bool symmetric, bool* order_dropped = nullptr)
{
  DiffOp<K> op = to_plain_basis(op0);
  int n = op.order();
  detail::PairBasis B(n, symmetric);
  int m = B.dim();
  auto cl = square_closure(op, symmetric, m);
  auto dep = first_dependency(cl.w, m);
  if (dep.empty()) throw std::runtime_error("square closure found no dependency");
  std::vector<RatFunc<K>> c;
  for (auto& q : dep) c.push_back(RatFunc<K>(q));
  DiffOp<K> r(op.var, std::move(c));
  if (order_dropped) *order_dropped = r.order() < m;
  return r;
}

template <class K>
DiffOp<K> sym_square(const DiffOp<K>& op, bool* order_dropped = nullptr)
{
  return square_operator(op, true, order_dropped);
}

template <class K>
DiffOp<K> ext_square(const DiffOp<K>& op, bool* order_dropped = nullptr)
{
  return square_operator(op, false, order_dropped);
}

// Symmetric power via the same closure on k-fold multisets (k small).
template <class K>
DiffOp<K> sym_power(const DiffOp<K>& op0, int power, bool* order_dropped = nullptr)
{
  if (power == 2) return sym_square(op0, order_dropped);
  DiffOp<K> op = to_plain_basis(op0);
  int n = op.order();
  PolyOp<K> P = to_polyop(op);
  Poly<K> lead = P.p[n];
  // multiset basis of size `power` over derivative orders 0..n-1
  std::vector<std::vector<int>> idx;
  std::vector<int> cur(power, 0);
  std::function<void(int, int)> gen = [&](int pos, int low) {
    if (pos == power) {
      idx.push_back(cur);
      return;
    }
    for (int v = low; v < n; ++v) {
      cur[pos] = v;
      gen(pos + 1, v);
    }
  };
  gen(0, 0);
  int m = (int)idx.size();
  std::map<std::vector<int>, int> pos;
  for (int s = 0; s < m; ++s) pos[idx[s]] = s;

  auto add_mon = [&](std::vector<Poly<K>>& out, std::vector<int> key, const Poly<K>& f,
                     bool reduced) {
    // key sorted except possibly one entry == n needing reduction
    for (int t = 0; t < power; ++t) {
      if (key[t] == n) {
        for (int k = 0; k < n; ++k) {
          if (k >= (int)P.p.size() || P.p[k].is_zero()) continue;
          auto key2 = key;
          key2[t] = k;
          std::sort(key2.begin(), key2.end());
          out[pos[key2]] -= f * P.p[k];
        }
        return;
      }
    }
    std::sort(key.begin(), key.end());
    out[pos[key]] += reduced ? f : f * lead;
  };

  std::vector<std::vector<std::vector<Poly<K>>>> w;
  std::vector<std::vector<Poly<K>>> w0(1);
  w0[0].assign(m, Poly<K>());
  w0[0][pos[std::vector<int>(power, 0)]] = Poly<K>(f_one<K>());
  std::vector<std::vector<Poly<K>>> vecs{w0[0]};
  Poly<K> dlead = lead.derivative();
  for (int step = 1; step <= m; ++step) {
    auto& prev = vecs.back();
    std::vector<Poly<K>> nxt(m);
    for (int s = 0; s < m; ++s) {
      if (prev[s].is_zero()) continue;
      nxt[s] += prev[s].derivative() * lead - prev[s] * dlead * K((long)(step - 1));
      for (int t = 0; t < power; ++t) {
        auto key = idx[s];
        key[t] += 1;
        add_mon(nxt, key, prev[s], key[t] == n);
      }
    }
    vecs.push_back(std::move(nxt));
  }
  auto dep = first_dependency(vecs, m);
  if (dep.empty()) throw std::runtime_error("symmetric power closure found no dependency");
  std::vector<RatFunc<K>> c;
  for (auto& q : dep) c.push_back(RatFunc<K>(q));
  DiffOp<K> r(op.var, std::move(c));
  if (order_dropped) *order_dropped = r.order() < m;
  return r;
}

} // namespace scalform

#endif
