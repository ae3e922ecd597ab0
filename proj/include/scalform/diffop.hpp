#ifndef SCALFORM_DIFFOP_HPP
#define SCALFORM_DIFFOP_HPP

#include <string>
#include <vector>
#include <stdexcept>
#include "scalform/ratfunc.hpp"
#include "scalform/logseries.hpp"
#include "json.hpp"

namespace scalform {

// Linear differential operator sum_k c_k(x) d^k, coefficients ascending in
// the derivative order. basis selects the plain derivative d/dv or the
// homogeneous derivative v d/dv.
template <class K>
struct DiffOp {
  enum class Basis { D, ThetaD };

  std::string var = "x";
  Basis basis = Basis::D;
  std::vector<RatFunc<K>> c;

  DiffOp() = default;
  DiffOp(std::string v, std::vector<RatFunc<K>> coeffs, Basis b = Basis::D)
      : var(std::move(v)), basis(b), c(std::move(coeffs))
  {
    trim();
  }

  void trim()
  {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  int order() const { return (int)c.size() - 1; }
  bool is_zero() const { return c.empty(); }
  const RatFunc<K>& coeff(int k) const
  {
    static const RatFunc<K> z;
    return k >= 0 && k < (int)c.size() ? c[k] : z;
  }

  static DiffOp identity(const std::string& v)
  {
    return DiffOp(v, {RatFunc<K>(f_one<K>())});
  }
  static DiffOp d(const std::string& v)
  {
    return DiffOp(v, {RatFunc<K>(), RatFunc<K>(f_one<K>())});
  }

  friend DiffOp operator+(const DiffOp& a, const DiffOp& b)
  {
    check_compat(a, b);
    DiffOp r = a;
    if ((int)b.c.size() > (int)r.c.size()) r.c.resize(b.c.size());
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
  }
  friend DiffOp operator-(const DiffOp& a, const DiffOp& b)
  {
    check_compat(a, b);
    DiffOp r = a;
    if ((int)b.c.size() > (int)r.c.size()) r.c.resize(b.c.size());
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.trim();
    return r;
  }
  friend DiffOp operator*(const DiffOp& a, const RatFunc<K>& f)
  {
    DiffOp r = a;
    for (auto& x : r.c) x *= f;
    r.trim();
    return r;
  }
  friend DiffOp operator*(const RatFunc<K>& f, const DiffOp& a) { return a * f; }

  static void check_compat(const DiffOp& a, const DiffOp& b)
  {
    if (a.var != b.var) throw std::invalid_argument("operator variable mismatch");
    if (a.basis != b.basis) throw std::invalid_argument("operator basis mismatch");
  }
};

namespace detail {

// rows[k] = coefficients of D^k composed with b (in the plain-derivative basis)
template <class K>
std::vector<std::vector<RatFunc<K>>> d_power_rows(const DiffOp<K>& b, int kmax)
{
  std::vector<std::vector<RatFunc<K>>> rows(kmax + 1);
  rows[0].assign(b.c.begin(), b.c.end());
  for (int k = 1; k <= kmax; ++k) {
    auto& prev = rows[k - 1];
    std::vector<RatFunc<K>> cur(prev.size() + 1);
    for (size_t i = 0; i < prev.size(); ++i) {
      cur[i + 1] += prev[i];            // D . c D^i -> c D^(i+1)
      cur[i] += prev[i].derivative();   //           + c' D^i
    }
    rows[k] = std::move(cur);
  }
  return rows;
}

} // namespace detail

template <class K>
DiffOp<K> to_plain_basis(const DiffOp<K>& a);

// a . b (apply b first, then a); same variable and basis required.
template <class K>
DiffOp<K> compose(const DiffOp<K>& a0, const DiffOp<K>& b0)
{
  DiffOp<K>::check_compat(a0, b0);
  bool theta = a0.basis == DiffOp<K>::Basis::ThetaD;
  DiffOp<K> a = theta ? to_plain_basis(a0) : a0;
  DiffOp<K> b = theta ? to_plain_basis(b0) : b0;
  if (a.is_zero() || b.is_zero()) return DiffOp<K>(a.var, {});
  auto rows = detail::d_power_rows(b, a.order());
  std::vector<RatFunc<K>> out(a.order() + b.order() + 1);
  for (int k = 0; k <= a.order(); ++k) {
    if (a.c[k].is_zero()) continue;
    for (size_t i = 0; i < rows[k].size(); ++i) out[i] += a.c[k] * rows[k][i];
  }
  DiffOp<K> r(a.var, std::move(out));
  return theta ? to_theta_basis(r) : r;
}

// Formal adjoint sum (-1)^k D^k . c_k; an involution.
template <class K>
DiffOp<K> adjoint(const DiffOp<K>& a0)
{
  bool theta = a0.basis == DiffOp<K>::Basis::ThetaD;
  DiffOp<K> a = theta ? to_plain_basis(a0) : a0;
  std::vector<RatFunc<K>> out(a.order() + 1);
  for (int k = 0; k <= a.order(); ++k) {
    if (a.c[k].is_zero()) continue;
    // build D^k . (c_k .) acting on D^0
    std::vector<RatFunc<K>> row{a.c[k]};
    for (int i = 0; i < k; ++i) {
      std::vector<RatFunc<K>> cur(row.size() + 1);
      for (size_t j = 0; j < row.size(); ++j) {
        cur[j + 1] += row[j];
        cur[j] += row[j].derivative();
      }
      row = std::move(cur);
    }
    bool neg = k & 1;
    for (size_t j = 0; j < row.size(); ++j) out[j] += neg ? -row[j] : row[j];
  }
  DiffOp<K> r(a.var, std::move(out));
  return theta ? to_theta_basis(r) : r;
}

// Euclidean right division: a = compose(q, b) + r with order(r) < order(b).
template <class K>
void right_divide(const DiffOp<K>& a0, const DiffOp<K>& b0, DiffOp<K>& q, DiffOp<K>& r)
{
  DiffOp<K>::check_compat(a0, b0);
  bool theta = a0.basis == DiffOp<K>::Basis::ThetaD;
  DiffOp<K> a = theta ? to_plain_basis(a0) : a0;
  DiffOp<K> b = theta ? to_plain_basis(b0) : b0;
  if (b.order() < 0) throw std::invalid_argument("right_divide by zero operator");
  r = a;
  q = DiffOp<K>(a.var, {});
  if (a.order() < b.order()) {
    if (theta) r = to_theta_basis(r);
    return;
  }
  auto rows = detail::d_power_rows(b, a.order() - b.order());
  while (r.order() >= b.order()) {
    int d = r.order() - b.order();
    RatFunc<K> f = r.c[r.order()] / rows[d][r.order()];
    q.c.resize(std::max<size_t>(q.c.size(), d + 1));
    q.c[d] += f;
    for (size_t i = 0; i < rows[d].size(); ++i) {
      if (i >= r.c.size()) r.c.resize(i + 1);
      r.c[i] -= f * rows[d][i];
    }
    r.trim();
    if (r.order() >= (int)b.order() + d) throw std::runtime_error("right_divide failed to reduce");
  }
  q.trim();
  if (theta) {
    q = to_theta_basis(q);
    r = to_theta_basis(r);
  }
}

template <class K>
bool divides_right(const DiffOp<K>& b, const DiffOp<K>& a)
{
  DiffOp<K> q, r;
  right_divide(a, b, q, r);
  return r.is_zero();
}

// theta-basis -> plain basis: theta^k = sum_j S2(k,j) x^j D^j.
template <class K>
DiffOp<K> to_plain_basis(const DiffOp<K>& a)
{
  if (a.basis == DiffOp<K>::Basis::D) return a;
  int n = a.order();
  std::vector<std::vector<K>> s2(n + 1, std::vector<K>(n + 1, f_zero<K>()));
  s2[0][0] = f_one<K>();
  for (int k = 1; k <= n; ++k)
    for (int j = 1; j <= k; ++j) s2[k][j] = s2[k - 1][j - 1] + K((long)j) * s2[k - 1][j];
  RatFunc<K> x = RatFunc<K>::x();
  std::vector<RatFunc<K>> out(n + 1);
  for (int k = 0; k <= n; ++k) {
    if (a.c[k].is_zero()) continue;
    RatFunc<K> xj(f_one<K>());
    for (int j = 0; j <= k; ++j) {
      if (!f_is_zero(s2[k][j])) out[j] += a.c[k] * RatFunc<K>(s2[k][j]) * xj;
      xj = xj * x;
    }
  }
  DiffOp<K> r(a.var, std::move(out), DiffOp<K>::Basis::D);
  return r;
}

// plain -> theta basis: D^k = x^(-k) theta (theta-1) ... (theta-k+1).
template <class K>
DiffOp<K> to_theta_basis(const DiffOp<K>& a)
{
  if (a.basis == DiffOp<K>::Basis::ThetaD) return a;
  int n = a.order();
  std::vector<Poly<K>> ff(n + 1);
  ff[0] = Poly<K>(f_one<K>());
  for (int k = 1; k <= n; ++k) {
    Poly<K> lin;
    lin.coeff(0) = K(-(long)(k - 1));
    lin.coeff(1) = f_one<K>();
    lin.trim();
    ff[k] = ff[k - 1] * lin;
  }
  RatFunc<K> xinv = RatFunc<K>(Poly<K>(f_one<K>()), Poly<K>::x());
  std::vector<RatFunc<K>> out(n + 1);
  for (int k = 0; k <= n; ++k) {
    if (a.c[k].is_zero()) continue;
    RatFunc<K> f = a.c[k] * rf_pow(xinv, k);
    for (int j = 0; j <= k; ++j)
      if (!f_is_zero(ff[k][j])) out[j] += f * RatFunc<K>(ff[k][j]);
  }
  DiffOp<K> r(a.var, std::move(out), DiffOp<K>::Basis::ThetaD);
  return r;
}

// x^m * op = sum_j x^j P_j(theta) with P_0 the indicial polynomial at 0.
// Requires polynomial coefficients after clearing denominators (left unit).
template <class K>
struct ThetaForm {
  std::vector<Poly<K>> P; // P[j] multiplies x^j
};

template <class K>
ThetaForm<K> theta_form(const DiffOp<K>& a0)
{
  DiffOp<K> a = to_plain_basis(a0);
  // clear denominators
  Poly<K> den(f_one<K>());
  for (auto& f : a.c)
    if (!f.is_zero()) den = den * (f.den / poly_gcd(den, f.den));
  int n = a.order();
  if (n < 0) throw std::invalid_argument("theta_form of zero operator");
  // falling factorials
  std::vector<Poly<K>> ff(n + 1);
  ff[0] = Poly<K>(f_one<K>());
  for (int k = 1; k <= n; ++k) {
    Poly<K> lin;
    lin.coeff(0) = K(-(long)(k - 1));
    lin.coeff(1) = f_one<K>();
    lin.trim();
    ff[k] = ff[k - 1] * lin;
  }
  // collect x^(n-k) * poly_coeff_k(x) * ff_k(theta)
  std::vector<Poly<K>> Q; // Q[j] multiplies x^j, j from 0 up
  for (int k = 0; k <= n; ++k) {
    if (a.c[k].is_zero()) continue;
    Poly<K> pk = a.c[k].num * (den / a.c[k].den);
    for (int i = 0; i <= pk.degree(); ++i) {
      if (f_is_zero(pk[i])) continue;
      int j = i + n - k;
      if ((int)Q.size() <= j) Q.resize(j + 1);
      Q[j] += ff[k] * pk[i];
    }
  }
  int v = 0;
  while (v < (int)Q.size() && Q[v].is_zero()) ++v;
  ThetaForm<K> tf;
  tf.P.assign(Q.begin() + v, Q.end());
  if (tf.P.empty()) throw std::invalid_argument("theta_form of zero operator");
  return tf;
}

// Apply to a log-series (plain basis, K coefficients acting through Rat).
inline LogSeries<Rat> apply(const DiffOp<Rat>& a0, const LogSeries<Rat>& s)
{
  DiffOp<Rat> a = to_plain_basis(a0);
  LogSeries<Rat> acc(s.rho, s.nvalid);
  LogSeries<Rat> dk = s;
  for (int k = 0; k <= a.order(); ++k) {
    if (!a.c[k].is_zero()) acc += mul_ratfunc(dk, a.c[k]);
    if (k < a.order()) dk = dk.derivative();
  }
  return acc;
}

// Apply to a rational function.
template <class K>
RatFunc<K> apply(const DiffOp<K>& a0, const RatFunc<K>& f)
{
  DiffOp<K> a = to_plain_basis(a0);
  RatFunc<K> acc;
  RatFunc<K> dk = f;
  for (int k = 0; k <= a.order(); ++k) {
    if (!a.c[k].is_zero()) acc += a.c[k] * dk;
    if (k < a.order()) dk = dk.derivative();
  }
  return acc;
}

// Left-multiply by the inverse leading coefficient: same solution space,
// unit leading coefficient. Products of factors are formed from these.
template <class K>
DiffOp<K> monic_left(const DiffOp<K>& a0)
{
  DiffOp<K> a = to_plain_basis(a0);
  if (a.is_zero()) return a;
  RatFunc<K> lead = a.c.back();
  for (auto& f : a.c) f = f / lead;
  return a;
}

// Primitive form: polynomial coefficients, no common polynomial factor.
// Unique up to a scalar; used for comparisons up to a left unit.
template <class K>
DiffOp<K> primitive_form(const DiffOp<K>& a0)
{
  DiffOp<K> a = to_plain_basis(a0);
  if (a.is_zero()) return a;
  Poly<K> den(f_one<K>());
  for (auto& f : a.c)
    if (!f.is_zero()) den = den * (f.den / poly_gcd(den, f.den));
  std::vector<Poly<K>> p(a.c.size());
  Poly<K> g;
  for (size_t k = 0; k < a.c.size(); ++k) {
    if (a.c[k].is_zero()) continue;
    p[k] = a.c[k].num * (den / a.c[k].den);
    g = g.is_zero() ? p[k] : poly_gcd(g, p[k]);
  }
  DiffOp<K> r(a.var, {}, DiffOp<K>::Basis::D);
  r.c.resize(a.c.size());
  for (size_t k = 0; k < a.c.size(); ++k)
    if (!p[k].is_zero()) r.c[k] = RatFunc<K>(p[k] / g);
  r.trim();
  return r;
}

// Rational-content normalization for rational operators (integer primitive
// coefficients, positive leading coefficient of the top-order term).
inline DiffOp<Rat> normalized_primitive(const DiffOp<Rat>& a0)
{
  DiffOp<Rat> a = primitive_form(a0);
  if (a.is_zero()) return a;
  Int g(0), l(1);
  for (auto& f : a.c)
    for (auto& q : f.num.c) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num().get_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    }
  Rat cont = rat(g, l);
  if (a.c.back().num.lead() < 0) cont = -cont;
  for (auto& f : a.c) f = f * RatFunc<Rat>(Rat(1) / cont);
  return a;
}

template <class K>
bool equal_up_to_unit(const DiffOp<K>& a, const DiffOp<K>& b)
{
  DiffOp<K> pa = primitive_form(a), pb = primitive_form(b);
  if (pa.order() != pb.order()) return false;
  if (pa.is_zero()) return true;
  // compare after making top coefficients equal
  int n = pa.order();
  RatFunc<K> f = pa.c[n] / pb.c[n];
  if (!f.is_poly() || f.num.degree() != 0) return false;
  for (int k = 0; k <= n; ++k)
    if (pa.c[k] != pb.c[k] * f) return false;
  return true;
}

// Conjugation by a power of a polynomial: returns g^(-gamma) . op . g^gamma,
// which has rational coefficients again (D picks up gamma g'/g).
template <class K>
DiffOp<K> conjugate_by_power(const DiffOp<K>& a0, const Poly<K>& g, const Rat& gamma)
{
  DiffOp<K> a = to_plain_basis(a0);
  RatFunc<K> shift = RatFunc<K>(g.derivative(), g) * RatFunc<K>(c_from_rat<K>(gamma));
  // powers of (D + shift)
  std::vector<std::vector<RatFunc<K>>> pw(a.order() + 1);
  pw[0] = {RatFunc<K>(f_one<K>())};
  for (int k = 1; k <= a.order(); ++k) {
    auto& prev = pw[k - 1];
    std::vector<RatFunc<K>> cur(prev.size() + 1);
    for (size_t i = 0; i < prev.size(); ++i) {
      cur[i + 1] += prev[i];
      cur[i] += prev[i].derivative() + shift * prev[i];
    }
    pw[k] = std::move(cur);
  }
  std::vector<RatFunc<K>> out(a.order() + 1);
  for (int k = 0; k <= a.order(); ++k) {
    if (a.c[k].is_zero()) continue;
    for (size_t i = 0; i < pw[k].size(); ++i) out[i] += a.c[k] * pw[k][i];
  }
  return DiffOp<K>(a.var, std::move(out));
}

// ---- gcd-free composition ---------------------------------------------
// Nested coefficient fields (e.g. Q(N)(s)) make reduced rational-function
// arithmetic prohibitively slow in long compositions. PolyOp keeps the
// operator as (1/den) sum p_k D^k with polynomial data only; composition and
// derivative steps never compute a gcd. An opportunistic exact-division pass
// against known denominator factors keeps the sizes near-minimal.
template <class K>
struct PolyOp {
  std::string var = "x";
  Poly<K> den{f_one<K>()};
  std::vector<Poly<K>> p;

  int order() const { return (int)p.size() - 1; }
  void trim()
  {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
  }
};

template <class K>
PolyOp<K> to_polyop(const DiffOp<K>& a0)
{
  DiffOp<K> a = to_plain_basis(a0);
  PolyOp<K> r;
  r.var = a.var;
  std::vector<Poly<K>> dens;
  for (auto& f : a.c) {
    if (f.is_zero()) continue;
    bool seen = false;
    for (auto& d : dens)
      if (d == f.den) { seen = true; break; }
    if (!seen) dens.push_back(f.den);
  }
  r.den = Poly<K>(f_one<K>());
  for (auto& d : dens) r.den = r.den * d;
  for (auto& f : a.c) {
    if (f.is_zero()) {
      r.p.push_back(Poly<K>());
      continue;
    }
    r.p.push_back(f.num * (r.den / f.den));
  }
  r.trim();
  return r;
}

template <class K>
DiffOp<K> to_diffop(const PolyOp<K>& a)
{
  std::vector<RatFunc<K>> c;
  for (auto& q : a.p) c.push_back(RatFunc<K>(q, a.den));
  return DiffOp<K>(a.var, std::move(c));
}

// Divide out candidate factors that divide the denominator and every
// numerator exactly.
template <class K>
void polyop_reduce_with(PolyOp<K>& a, const std::vector<Poly<K>>& candidates)
{
  for (auto& f : candidates) {
    if (f.degree() < 1) continue;
    while (true) {
      Poly<K> q, r;
      Poly<K>::divrem(a.den, f, q, r);
      if (!r.is_zero() || q.is_zero()) break;
      std::vector<Poly<K>> np(a.p.size());
      bool all = true;
      for (size_t i = 0; i < a.p.size(); ++i) {
        if (a.p[i].is_zero()) continue;
        Poly<K> qi, ri;
        Poly<K>::divrem(a.p[i], f, qi, ri);
        if (!ri.is_zero()) { all = false; break; }
        np[i] = qi;
      }
      if (!all) break;
      a.den = q;
      a.p = std::move(np);
    }
  }
}

// compose: a . b without any rational-function reduction.
template <class K>
PolyOp<K> compose_polyop(const PolyOp<K>& a, const PolyOp<K>& b,
                         const std::vector<Poly<K>>& reduce_candidates = {})
{
  if (a.var != b.var) throw std::invalid_argument("operator variable mismatch");
  int na = a.order(), nb = b.order();
  // rows[k] = D^k . b over denominator b.den^(k+1)
  std::vector<std::vector<Poly<K>>> rows(na + 1);
  rows[0] = b.p;
  Poly<K> dden = b.den.derivative();
  for (int k = 1; k <= na; ++k) {
    auto& prev = rows[k - 1];
    std::vector<Poly<K>> cur(prev.size() + 1);
    for (size_t i = 0; i < prev.size(); ++i) {
      if (prev[i].is_zero()) continue;
      cur[i + 1] += prev[i] * b.den;
      cur[i] += prev[i].derivative() * b.den - prev[i] * dden * K((long)k);
    }
    rows[k] = std::move(cur);
  }
  PolyOp<K> out;
  out.var = a.var;
  out.p.assign(na + nb + 1, Poly<K>());
  // powers of b.den to even out row denominators
  std::vector<Poly<K>> dpow(na + 1);
  dpow[na] = Poly<K>(f_one<K>());
  for (int k = na - 1; k >= 0; --k) dpow[k] = dpow[k + 1] * b.den;
  for (int k = 0; k <= na; ++k) {
    if (k >= (int)a.p.size() || a.p[k].is_zero()) continue;
    for (size_t i = 0; i < rows[k].size(); ++i) {
      if (rows[k][i].is_zero()) continue;
      out.p[i] += a.p[k] * rows[k][i] * dpow[k];
    }
  }
  Poly<K> bpow(f_one<K>());
  for (int i = 0; i <= na; ++i) bpow = bpow * b.den;
  out.den = a.den * bpow;
  out.trim();
  polyop_reduce_with(out, reduce_candidates);
  return out;
}

// Instantiate the parameter of a gcd-free operator over Q(N)[v].
inline DiffOp<Rat> instantiate_param(const PolyOp<QN>& op, const Rat& value)
{
  auto eval_poly = [&](const Poly<QN>& p) {
    Poly<Rat> r;
    for (int i = 0; i <= p.degree(); ++i)
      if (!p[i].is_zero()) r.coeff(i) = p[i].eval(value);
    r.trim();
    return r;
  };
  Poly<Rat> den = eval_poly(op.den);
  DiffOp<Rat> r;
  r.var = op.var;
  for (auto& q : op.p) r.c.push_back(RatFunc<Rat>(eval_poly(q), den));
  r.trim();
  return r;
}

// Instantiate the parameter of an operator over Q(N): evaluate every
// coefficient at a rational value of N.
inline DiffOp<Rat> instantiate_param(const DiffOp<QN>& op, const Rat& value)
{
  DiffOp<Rat> r;
  r.var = op.var;
  r.basis = op.basis == DiffOp<QN>::Basis::D ? DiffOp<Rat>::Basis::D : DiffOp<Rat>::Basis::ThetaD;
  for (auto& f : op.c) {
    Poly<Rat> n, d;
    for (int i = 0; i <= f.num.degree(); ++i)
      if (!f.num[i].is_zero()) n.coeff(i) = f.num[i].eval(value);
    for (int i = 0; i <= f.den.degree(); ++i)
      if (!f.den[i].is_zero()) d.coeff(i) = f.den[i].eval(value);
    n.trim();
    d.trim();
    r.c.push_back(RatFunc<Rat>(n, d));
  }
  r.trim();
  return r;
}

// ---- JSON wire format ----------------------------------------------------
// {"var": name, "basis": "D"|"thetaD", "param": optional,
//  "coeffs": [{"num": [...], "den": [...]}, ...]}
// ascending derivative order; polynomial entries ascending degree; integers
// as decimal strings; bivariate entries are [deg_v, deg_param, int] triples.

inline nlohmann::json poly_to_json(const Poly<Rat>& p)
{
  Int l(1);
  for (auto& q : p.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
  nlohmann::json arr = nlohmann::json::array();
  for (int i = 0; i <= p.degree(); ++i) {
    Rat v = p[i] * Rat(l);
    arr.push_back(v.get_num().get_str());
  }
  return arr;
}

inline Poly<Rat> poly_from_json(const nlohmann::json& arr)
{
  Poly<Rat> p;
  for (size_t i = 0; i < arr.size(); ++i) p.coeff((int)i) = Rat(Int(arr[i].get<std::string>()));
  p.trim();
  return p;
}

inline nlohmann::json to_json(const DiffOp<Rat>& a)
{
  nlohmann::json j;
  j["var"] = a.var;
  j["basis"] = a.basis == DiffOp<Rat>::Basis::D ? "D" : "thetaD";
  nlohmann::json coeffs = nlohmann::json::array();
  for (auto& f : a.c) {
    nlohmann::json e;
    // normalize the scalar so num/den are integer polynomials
    Int l(1);
    for (auto& q : f.num.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    for (auto& q : f.den.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    Poly<Rat> n = f.num * Rat(l), d = f.den * Rat(l);
    e["num"] = poly_to_json(n);
    e["den"] = poly_to_json(d);
    coeffs.push_back(e);
  }
  j["coeffs"] = coeffs;
  return j;
}

inline DiffOp<Rat> diffop_from_json(const nlohmann::json& j)
{
  DiffOp<Rat> a;
  a.var = j.at("var").get<std::string>();
  a.basis = j.at("basis").get<std::string>() == "thetaD" ? DiffOp<Rat>::Basis::ThetaD
                                                         : DiffOp<Rat>::Basis::D;
  for (auto& e : j.at("coeffs")) {
    Poly<Rat> n = poly_from_json(e.at("num"));
    Poly<Rat> d = poly_from_json(e.at("den"));
    a.c.push_back(RatFunc<Rat>(n, d));
  }
  a.trim();
  return a;
}

} // namespace scalform

#endif
