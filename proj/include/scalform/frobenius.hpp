#ifndef SCALFORM_FROBENIUS_HPP
#define SCALFORM_FROBENIUS_HPP

#include <vector>
#include <algorithm>
#include <stdexcept>
#include "scalform/diffop.hpp"
#include "scalform/linalg.hpp"

namespace scalform {

struct ExponentMultiset {
  std::vector<std::pair<Rat, int>> roots; // (exponent, multiplicity)
  int total() const
  {
    int t = 0;
    for (auto& [r, m] : roots) t += m;
    return t;
  }
  bool contains(const Rat& e, int mult) const
  {
    for (auto& [r, m] : roots)
      if (r == e && m == mult) return true;
    return false;
  }
};

// Local exponents at x = 0. Throws if x = 0 is an irregular singular point
// (indicial degree below the order) or if the indicial roots are irrational.
inline ExponentMultiset indicial_exponents(const DiffOp<Rat>& op)
{
  auto tf = theta_form(op);
  int n = to_plain_basis(op).order();
  if (tf.P[0].degree() != n)
    throw std::domain_error("x = 0 is an irregular singular point");
  Poly<Rat> residual;
  ExponentMultiset e;
  e.roots = rational_roots(tf.P[0], &residual);
  if (residual.degree() > 0)
    throw std::domain_error("indicial polynomial has irrational roots");
  std::sort(e.roots.begin(), e.roots.end(),
            [](auto& a, auto& b) { return a.first < b.first; });
  return e;
}

namespace detail {

// Coefficients linear in a set of parameters.
struct ParamVec {
  std::vector<Rat> v;
  bool is_zero() const
  {
    for (auto& x : v)
      if (x != 0) return false;
    return true;
  }
  Rat get(size_t i) const { return i < v.size() ? v[i] : Rat(0); }
  void set(size_t i, const Rat& x)
  {
    if (i >= v.size()) v.resize(i + 1, Rat(0));
    v[i] = x;
  }
  ParamVec& axpy(const Rat& a, const ParamVec& o)
  {
    if (a == 0) return *this;
    if (o.v.size() > v.size()) v.resize(o.v.size(), Rat(0));
    for (size_t i = 0; i < o.v.size(); ++i) v[i] += a * o.v[i];
    return *this;
  }
  ParamVec scaled(const Rat& a) const
  {
    ParamVec r;
    r.v.resize(v.size());
    for (size_t i = 0; i < v.size(); ++i) r.v[i] = a * v[i];
    return r;
  }
};

} // namespace detail

// Formal solutions at the regular singular point x = 0.
struct FormalBasis {
  std::vector<LogSeries<Rat>> members;
};

namespace detail {

struct ClassSolve {
  // coefficients in the divided-log basis: c[k][j] times x^(base+k) ln^j / j!
  std::vector<std::vector<ParamVec>> c;
  int nparams = 0;
  std::vector<std::vector<Rat>> constraints; // rows over params that must vanish
};

// Solve the recursion for one congruence class of exponents.
// P[d](theta) multiplies x^d; base is the smallest exponent of the class.
inline ClassSolve solve_class(const std::vector<Poly<Rat>>& P, const Rat& base,
                              const std::vector<long>& res_offsets,
                              const std::vector<int>& res_mults, int M, int Jmax)
{
  int J = (int)P.size() - 1;
  ClassSolve out;
  out.c.assign(M, std::vector<ParamVec>(Jmax + 1));
  // derivative tables P^(i)
  std::vector<std::vector<Poly<Rat>>> dP(P.size());
  for (size_t d = 0; d < P.size(); ++d) {
    Poly<Rat> q = P[d];
    while (true) {
      dP[d].push_back(q);
      if (q.degree() <= 0) break;
      q = q.derivative();
    }
  }
  auto matval = [&](int d, const Rat& s, int i) -> Rat {
    // P_d^(i)(s) / i!
    if (i >= (int)dP[d].size()) return Rat(0);
    return dP[d][i].eval(s) / Rat(factorial(i));
  };
  for (int k = 0; k < M; ++k) {
    Rat s = base + k;
    // rhs[j] = - sum_{d>=1} sum_i P_d^(i)(s-d)/i! * c[k-d][j+i]
    std::vector<ParamVec> rhs(Jmax + 1);
    for (int d = 1; d <= std::min(k, J); ++d) {
      Rat sd = s - d;
      for (int j = 0; j <= Jmax; ++j)
        for (int i = 0; j + i <= Jmax; ++i) {
          Rat f = matval(d, sd, i);
          if (f == 0) continue;
          rhs[j].axpy(-f, out.c[k - d][j + i]);
        }
    }
    // find resonance multiplicity at this offset
    int mu = 0;
    for (size_t r = 0; r < res_offsets.size(); ++r)
      if (res_offsets[r] == k) mu = res_mults[r];
    if (mu == 0 && matval(0, s, 0) == 0)
      throw std::runtime_error("frobenius: unexpected indicial vanishing");
    if (mu == 0) {
      Rat p0 = matval(0, s, 0);
      for (int j = Jmax; j >= 0; --j) {
        ParamVec acc = rhs[j];
        for (int j2 = j + 1; j2 <= Jmax; ++j2) acc.axpy(-matval(0, s, j2 - j), out.c[k][j2]);
        out.c[k][j] = acc.scaled(Rat(1) / p0);
      }
    } else {
      // zero diagonal with multiplicity mu: unknowns j < mu are fresh params,
      // unknown j is determined by equation j - mu, equations beyond Jmax - mu
      // become constraints on the parameters.
      for (int j = 0; j < mu && j <= Jmax; ++j) {
        ParamVec fresh;
        fresh.set(out.nparams++, Rat(1));
        out.c[k][j] = fresh;
      }
      Rat pmu = matval(0, s, mu);
      for (int j = Jmax; j >= mu; --j) {
        int eq = j - mu;
        ParamVec acc = rhs[eq];
        for (int j2 = j + 1; j2 <= Jmax; ++j2)
          acc.axpy(-matval(0, s, j2 - eq), out.c[k][j2]);
        out.c[k][j] = acc.scaled(Rat(1) / pmu);
      }
      for (int eq = std::max(0, Jmax - mu + 1); eq <= Jmax; ++eq) {
        ParamVec acc = rhs[eq];
        for (int j2 = eq + 1; j2 <= Jmax; ++j2) acc.axpy(-matval(0, s, j2 - eq), out.c[k][j2]);
        if (!acc.is_zero()) {
          std::vector<Rat> row(out.nparams, Rat(0));
          for (int i = 0; i < (int)acc.v.size() && i < out.nparams; ++i) row[i] = acc.v[i];
          out.constraints.push_back(std::move(row));
        }
      }
    }
  }
  return out;
}

} // namespace detail

// Full formal solution basis through x^(rho+M); canonical normalization is a
// reduced echelon form over the (exponent, log) positions.
inline FormalBasis formal_basis(const DiffOp<Rat>& op, int M = 60)
{
  auto tf = theta_form(op);
  auto exps = indicial_exponents(op);
  int order = to_plain_basis(op).order();

  // group exponents by integer difference
  std::vector<std::vector<std::pair<Rat, int>>> classes;
  for (auto& rm : exps.roots) {
    bool placed = false;
    for (auto& cl : classes) {
      Rat d = rm.first - cl[0].first;
      if (d.get_den() == 1) {
        cl.push_back(rm);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({rm});
  }

  FormalBasis basis;
  std::vector<Poly<Rat>> P = tf.P;
  for (auto& cl : classes) {
    std::sort(cl.begin(), cl.end(), [](auto& a, auto& b) { return a.first < b.first; });
    Rat base = cl[0].first;
    std::vector<long> offs;
    std::vector<int> mults;
    int total = 0;
    for (auto& [r, m] : cl) {
      { Rat diff = r - base; offs.push_back(diff.get_num().get_si()); }
      mults.push_back(m);
      total += m;
    }
    long span = offs.back();
    int M_eff = M + (int)span;
    for (int Jmax = total - 1; Jmax <= total - 1 + order; ++Jmax) {
      auto cs = detail::solve_class(P, base, offs, mults, M_eff, Jmax);
      // restrict parameters to the constraint nullspace
      std::vector<std::vector<Rat>> dirs;
      if (cs.constraints.empty()) {
        for (int i = 0; i < cs.nparams; ++i) {
          std::vector<Rat> d(cs.nparams, Rat(0));
          d[i] = Rat(1);
          dirs.push_back(std::move(d));
        }
      } else {
        Mat<Rat> m((int)cs.constraints.size(), cs.nparams);
        for (int i = 0; i < m.rows; ++i)
          for (int j = 0; j < (int)cs.constraints[i].size(); ++j) m(i, j) = cs.constraints[i][j];
        dirs = nullspace(m);
      }
      if ((int)dirs.size() < total) continue; // raise the log budget and retry
      if ((int)dirs.size() > total)
        throw std::runtime_error("frobenius: solution space larger than the order");
      for (auto& dir : dirs) {
        LogSeries<Rat> s(base, M_eff);
        for (int k = 0; k < M_eff; ++k)
          for (int j = 0; j <= Jmax; ++j) {
            Rat v(0);
            for (size_t i = 0; i < dir.size(); ++i) v += cs.c[k][j].get(i) * dir[i];
            if (v != 0) s.set(k, j, v / Rat(factorial(j))); // divided to plain logs
          }
        s.normalize();
        basis.members.push_back(std::move(s));
      }
      break;
    }
  }
  if ((int)basis.members.size() != order)
    throw std::runtime_error("frobenius: dimension mismatch");

  // canonical reduced echelon form over positions ordered by (k, then log)
  auto leading = [](const LogSeries<Rat>& s) {
    for (int k = 0; k < (int)s.a.size(); ++k)
      for (int j = 0; j < (int)s.a[k].size(); ++j)
        if (s.a[k][j] != 0) return std::tuple<Rat, int, int>(s.rho + k, k, j);
    return std::tuple<Rat, int, int>(Rat(1 << 30), 0, 0);
  };
  std::sort(basis.members.begin(), basis.members.end(),
            [&](const LogSeries<Rat>& a, const LogSeries<Rat>& b) {
              auto la = leading(a), lb = leading(b);
              if (std::get<0>(la) != std::get<0>(lb)) return std::get<0>(la) < std::get<0>(lb);
              return std::get<2>(la) > std::get<2>(lb); // higher log power first
            });
  // eliminate: scale leading to 1, clear that position from the others
  for (size_t i = 0; i < basis.members.size(); ++i) {
    auto& si = basis.members[i];
    auto [e, k, j] = leading(si);
    Rat lead = si.get(k, j);
    if (lead == 0) continue;
    si = si * (Rat(1) / lead);
    for (size_t l = 0; l < basis.members.size(); ++l) {
      if (l == i) continue;
      auto& sl = basis.members[l];
      Rat d = e - sl.rho;
      if (d.get_den() != 1) continue;
      long kk = d.get_num().get_si();
      if (kk < 0) continue;
      Rat f = sl.get((int)kk, j);
      if (f != 0) sl = sl - si * f;
    }
  }
  return basis;
}

// The log-free power-series solutions at 0 as a normalized basis; the i-th
// member leads at the i-th analytic exponent with a unit coefficient and
// vanishes at the other analytic leading exponents.
inline std::vector<LogSeries<Rat>> analytic_kernel(const DiffOp<Rat>& op, int M = 60)
{
  auto basis = formal_basis(op, M);
  std::vector<LogSeries<Rat>> analytic;
  // group members by exponent class and solve the log positions to zero
  std::vector<int> cls(basis.members.size(), -1);
  std::vector<Rat> reps;
  for (size_t i = 0; i < basis.members.size(); ++i) {
    for (size_t r = 0; r < reps.size(); ++r) {
      Rat diff = basis.members[i].rho - reps[r];
      if (diff.get_den() == 1) cls[i] = (int)r;
    }
    if (cls[i] < 0) {
      reps.push_back(basis.members[i].rho);
      cls[i] = (int)reps.size() - 1;
    }
  }
  for (size_t r = 0; r < reps.size(); ++r) {
    std::vector<const LogSeries<Rat>*> mem;
    for (size_t i = 0; i < basis.members.size(); ++i)
      if (cls[i] == (int)r) mem.push_back(&basis.members[i]);
    // collect log positions across members of this class
    Rat base = reps[r];
    for (auto* m : mem) base = std::min(base, m->rho);
    int window = 1 << 28;
    for (auto* m : mem)
      { Rat diff = m->rho - base; window = std::min<long>(window, diff.get_num().get_si() + m->nvalid); }
    std::vector<std::pair<int, int>> logpos; // (k relative to base, j >= 1)
    int maxlog = 0;
    for (auto* m : mem) maxlog = std::max(maxlog, m->max_log());
    for (int k = 0; k < window; ++k)
      for (int j = 1; j <= maxlog; ++j) logpos.push_back({k, j});
    Mat<Rat> A((int)logpos.size(), (int)mem.size());
    for (int row = 0; row < (int)logpos.size(); ++row)
      for (int col = 0; col < (int)mem.size(); ++col) {
        Rat diffc = mem[col]->rho - base; long off = diffc.get_num().get_si();
        A(row, col) = mem[col]->get(logpos[row].first - (int)off, logpos[row].second);
      }
    for (auto& dir : nullspace(A)) {
      LogSeries<Rat> u(base, window);
      bool first = true;
      for (size_t col = 0; col < mem.size(); ++col) {
        if (dir[col] == 0) continue;
        if (first) {
          u = *mem[col] * dir[col];
          first = false;
        } else {
          u += *mem[col] * dir[col];
        }
      }
      u.normalize();
      if (first || u.is_zero_struct()) continue;
      if (u.rho.get_den() != 1 || u.rho < 0) continue;
      analytic.push_back(std::move(u));
    }
  }
  // reduced echelon over leading exponents
  for (auto& s : analytic) s.normalize();
  for (size_t pass = 0; pass < analytic.size(); ++pass) {
    std::sort(analytic.begin(), analytic.end(),
              [](auto& a, auto& b) { return a.rho < b.rho; });
    bool changed = false;
    for (size_t i = 0; i < analytic.size(); ++i) {
      Rat lead = analytic[i].get(0, 0);
      if (lead == 0) continue;
      if (lead != 1) analytic[i] = analytic[i] * (Rat(1) / lead);
      for (size_t l = 0; l < analytic.size(); ++l) {
        if (l == i) continue;
        Rat d = analytic[i].rho - analytic[l].rho;
        if (d.get_den() != 1 || d < 0) continue;
        Rat f = analytic[l].get((int)d.get_num().get_si(), 0);
        if (f != 0) {
          analytic[l] = analytic[l] - analytic[i] * f;
          analytic[l].normalize();
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  std::sort(analytic.begin(), analytic.end(),
            [](auto& a, auto& b) { return a.rho < b.rho; });
  return analytic;
}

// Express a printed partial series in the span of a basis: solves for the
// combination matching all supplied coefficients, returns true and the
// reconstructed full series when consistent.
inline bool match_in_span(const std::vector<LogSeries<Rat>>& basis, const LogSeries<Rat>& target,
                          LogSeries<Rat>& combo, std::vector<Rat>* coeffs_out = nullptr)
{
  // build the linear system over the target's known positions
  std::vector<std::tuple<Rat, int>> positions; // absolute exponent, log power
  for (int k = 0; k < (int)target.a.size(); ++k)
    for (int j = 0; j < (int)target.a[k].size(); ++j)
      positions.push_back({target.rho + k, j});
  Mat<Rat> A((int)positions.size(), (int)basis.size());
  std::vector<Rat> b((int)positions.size());
  for (int r = 0; r < (int)positions.size(); ++r) {
    auto [e, j] = positions[r];
    for (int c = 0; c < (int)basis.size(); ++c) {
      Rat d = e - basis[c].rho;
      if (d.get_den() != 1 || d < 0) continue;
      A(r, c) = basis[c].get((int)d.get_num().get_si(), j);
    }
    Rat dd = e - target.rho;
    b[r] = target.get((int)dd.get_num().get_si(), std::get<1>(positions[r]));
  }
  std::vector<Rat> x;
  if (!solve_linear(A, b, x)) return false;
  combo = LogSeries<Rat>(basis[0].rho, 0);
  bool first = true;
  for (size_t c = 0; c < basis.size(); ++c) {
    if (x[c] == 0) continue;
    if (first) {
      combo = basis[c] * x[c];
      first = false;
    } else {
      combo += basis[c] * x[c];
    }
  }
  if (first) combo = LogSeries<Rat>::zero(basis.empty() ? 1 : basis[0].nvalid);
  if (coeffs_out) *coeffs_out = x;
  return true;
}

} // namespace scalform

#endif
