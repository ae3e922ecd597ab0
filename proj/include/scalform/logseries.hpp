#ifndef SCALFORM_LOGSERIES_HPP
#define SCALFORM_LOGSERIES_HPP

#include <vector>
#include <string>
#include <sstream>
#include <cmath>
#include "scalform/bigrat.hpp"
#include "scalform/poly.hpp"
#include "scalform/ratfunc.hpp"

namespace scalform {

// Truncated series x^rho * sum_k P_k(ln x) x^k with coefficients in C.
// a[k][j] holds the coefficient of x^(rho+k) ln(x)^j. nvalid slots are
// guaranteed; anything beyond is unknown, not zero.
template <class C>
struct LogSeries {
  Rat rho = Rat(0);
  int nvalid = 0;
  Rat logk = Rat(1); // derivative of the log symbol is logk / x
  std::vector<std::vector<C>> a;

  LogSeries() = default;
  LogSeries(Rat rho_, int nvalid_) : rho(rho_), nvalid(nvalid_), a(nvalid_) {}

  static LogSeries zero(int nvalid_) { return LogSeries(Rat(0), nvalid_); }
  static LogSeries one(int nvalid_)
  {
    LogSeries s(Rat(0), nvalid_);
    s.set(0, 0, c_from_rat<C>(Rat(1)));
    return s;
  }
  static LogSeries xpow(const Rat& e, int nvalid_)
  {
    LogSeries s(e, nvalid_);
    s.set(0, 0, c_from_rat<C>(Rat(1)));
    return s;
  }

  int max_log() const
  {
    int m = 0;
    for (auto& v : a) m = std::max(m, (int)v.size() - 1);
    return m;
  }

  const C& get(int k, int j) const
  {
    static const C z = f_zero<C>();
    if (k < 0 || k >= (int)a.size()) return z;
    if (j < 0 || j >= (int)a[k].size()) return z;
    return a[k][j];
  }
  void set(int k, int j, const C& v)
  {
    if (k >= (int)a.size()) a.resize(k + 1);
    if (j >= (int)a[k].size()) a[k].resize(j + 1, f_zero<C>());
    a[k][j] = v;
  }
  void add(int k, int j, const C& v) { set(k, j, get(k, j) + v); }

  bool is_zero() const
  {
    for (int k = 0; k < nvalid && k < (int)a.size(); ++k)
      for (auto& c : a[k])
        if (!f_is_zero(c)) return false;
    return true;
  }

  // Shift rho past leading all-zero slots (keeps the window honest).
  void normalize()
  {
    for (auto& v : a) {
      while (!v.empty() && f_is_zero(v.back())) v.pop_back();
    }
    while (!a.empty() && a[0].empty() && nvalid > 0) {
      a.erase(a.begin());
      rho += 1;
      --nvalid;
    }
    if ((int)a.size() > nvalid) a.resize(nvalid);
  }

  // number of integer k >= 0 with rho + k strictly below bound
  static long slots_below(const Rat& rho, const Rat& bound)
  {
    Rat d = bound - rho;
    if (d <= 0) return 0;
    Int q = d.get_num() / d.get_den();
    long f = q.get_si();
    return (d - Rat(q) > 0) ? f + 1 : f;
  }

  friend LogSeries operator+(const LogSeries& x0, const LogSeries& y0)
  {
    LogSeries x = x0, y = y0;
    x.normalize();
    y.normalize();
    Rat bound = std::min(x.rho + x.nvalid, y.rho + y.nvalid);
    if (x.is_zero_struct() || y.is_zero_struct()) {
      LogSeries r = x.is_zero_struct() ? y : x;
      r.nvalid = std::min<long>(r.nvalid, slots_below(r.rho, bound));
      if ((int)r.a.size() > r.nvalid) r.a.resize(std::max(r.nvalid, 0));
      return r;
    }
    Rat d = x.rho - y.rho;
    if (d.get_den() != 1) throw std::domain_error("LogSeries add: exponents differ by non-integer");
    if (x.logk != y.logk && x.max_log() > 0 && y.max_log() > 0)
      throw std::domain_error("LogSeries add: log scales differ");
    long off = d.get_num().get_si(); // x.rho = y.rho + off
    const LogSeries& lo = off >= 0 ? y : x;
    const LogSeries& hi = off >= 0 ? x : y;
    long o = off >= 0 ? off : -off;
    LogSeries r(lo.rho, slots_below(lo.rho, bound));
    r.logk = x.max_log() > 0 ? x.logk : y.logk;
    for (int k = 0; k < r.nvalid; ++k) {
      if (k < (int)lo.a.size())
        for (int j = 0; j < (int)lo.a[k].size(); ++j) r.add(k, j, lo.get(k, j));
      int kh = k - (int)o;
      if (kh >= 0 && kh < (int)hi.a.size())
        for (int j = 0; j < (int)hi.a[kh].size(); ++j) r.add(k, j, hi.get(kh, j));
    }
    r.normalize();
    return r;
  }
  bool is_zero_struct() const
  {
    for (auto& v : a)
      for (auto& c : v)
        if (!f_is_zero(c)) return false;
    return true;
  }
  friend LogSeries operator-(const LogSeries& x, const LogSeries& y) { return x + (-y); }
  LogSeries operator-() const
  {
    LogSeries r = *this;
    for (auto& v : r.a)
      for (auto& c : v) c = -c;
    return r;
  }

  friend LogSeries operator*(const LogSeries& x, const LogSeries& y)
  {
    LogSeries r(x.rho + y.rho, std::min(x.nvalid, y.nvalid));
    r.logk = x.max_log() > 0 ? x.logk : y.logk;
    for (int k1 = 0; k1 < (int)x.a.size() && k1 < x.nvalid; ++k1)
      for (int j1 = 0; j1 < (int)x.a[k1].size(); ++j1) {
        if (f_is_zero(x.a[k1][j1])) continue;
        for (int k2 = 0; k2 + k1 < r.nvalid && k2 < (int)y.a.size(); ++k2)
          for (int j2 = 0; j2 < (int)y.a[k2].size(); ++j2) {
            if (f_is_zero(y.a[k2][j2])) continue;
            r.add(k1 + k2, j1 + j2, x.a[k1][j1] * y.a[k2][j2]);
          }
      }
    r.normalize();
    return r;
  }
  friend LogSeries operator*(const LogSeries& x, const C& c)
  {
    LogSeries r = x;
    for (auto& v : r.a)
      for (auto& k : v) k = k * c;
    return r;
  }
  LogSeries& operator+=(const LogSeries& y) { return *this = *this + y; }
  LogSeries& operator-=(const LogSeries& y) { return *this = *this - y; }

  LogSeries truncated(int n) const
  {
    LogSeries r = *this;
    r.nvalid = std::min(r.nvalid, n);
    if ((int)r.a.size() > r.nvalid) r.a.resize(r.nvalid);
    return r;
  }

  // d/dx with d(ln x)/dx = 1/x, term-exact.
  LogSeries derivative() const
  {
    LogSeries r(rho - 1, nvalid);
    r.logk = logk;
    for (int k = 0; k < (int)a.size(); ++k)
      for (int j = 0; j < (int)a[k].size(); ++j) {
        if (f_is_zero(a[k][j])) continue;
        Rat e = rho + k;
        if (e != 0) r.add(k, j, a[k][j] * c_from_rat<C>(e));
        if (j >= 1) r.add(k, j - 1, a[k][j] * c_from_rat<C>(Rat(j) * logk));
      }
    r.normalize();
    return r;
  }

  // Term-wise antiderivative, constant of integration zero;
  // x^-1 ln^j maps to ln^(j+1)/(j+1).
  LogSeries integral() const
  {
    LogSeries r(rho + 1, nvalid);
    r.logk = logk;
    for (int k = 0; k < (int)a.size(); ++k)
      for (int j = 0; j < (int)a[k].size(); ++j) {
        if (f_is_zero(a[k][j])) continue;
        Rat e = rho + k;
        if (e == -1) {
          // lands on the k slot at exponent 0 relative to rho+1
          r.add(k, j + 1, a[k][j] * c_from_rat<C>(rat(1, j + 1) / logk));
        } else {
          // int x^e ln^j = x^(e+1) sum_i (-1)^i j!/(j-i)! / (e+1)^(i+1) ln^(j-i)
          Rat inv = Rat(1) / (e + 1);
          Rat f = inv;
          for (int i = 0; i <= j; ++i) {
            r.add(k, j - i, a[k][j] * c_from_rat<C>(f));
            f = -f * inv * Rat(j - i) * logk;
          }
        }
      }
    r.normalize();
    return r;
  }

  // exp of a log-free series with positive integer valuation.
  LogSeries exponential() const
  {
    LogSeries s = *this;
    s.normalize();
    if (s.max_log() > 0) throw std::domain_error("exp of series with log terms");
    if (s.is_zero_struct()) {
      long w = slots_below(Rat(0), s.rho + s.nvalid);
      return one((int)std::max<long>(w, 1));
    }
    if (s.rho.get_den() != 1 || s.rho < 1)
      throw std::domain_error("exp needs positive integer valuation");
    long val = s.rho.get_num().get_si();
    int nv = (int)(s.nvalid + val);
    LogSeries r = one(nv);
    LogSeries term = one(nv);
    Rat fact(1);
    for (long m = 1; m * val < nv; ++m) {
      term = term * s;
      fact *= Rat(m);
      r += term * c_from_rat<C>(Rat(1) / fact);
    }
    return r;
  }

  bool operator==(const LogSeries& y) const
  {
    LogSeries d = *this - y;
    return d.is_zero();
  }

  // CSV rows "k,log_power,numerator,denominator" for exact coefficients
  // (k counted relative to rho; exponent recorded in a header line).
  std::string csv() const;

  double eval_double(double x) const;
};

template <>
inline std::string LogSeries<Rat>::csv() const
{
  std::ostringstream os;
  os << "# exponent " << to_string(rho) << ", valid_terms " << nvalid << "\n";
  os << "k,log_power,numerator,denominator\n";
  for (int k = 0; k < (int)a.size(); ++k)
    for (int j = 0; j < (int)a[k].size(); ++j)
      if (!f_is_zero(a[k][j]))
        os << k << "," << j << "," << a[k][j].get_num().get_str() << ","
           << a[k][j].get_den().get_str() << "\n";
  return os.str();
}

template <>
inline double LogSeries<Rat>::eval_double(double x) const
{
  double lx = std::log(x) * to_double(logk);
  double r = 0;
  for (int k = (int)a.size() - 1; k >= 0; --k) {
    double pk = 0, lp = 1;
    for (int j = 0; j < (int)a[k].size(); ++j) {
      pk += to_double(a[k][j]) * lp;
      lp *= lx;
    }
    r = r * x + pk;
  }
  return r * std::pow(x, to_double(rho));
}

// Coefficient-wise inverse of a scalar series given as Poly (q(0) != 0).
template <class C>
std::vector<C> inverse_series(const std::vector<C>& q, int n)
{
  if (q.empty() || f_is_zero(q[0])) throw std::domain_error("series inverse: zero constant term");
  std::vector<C> r(n, f_zero<C>());
  C q0i = f_inv(q[0]);
  r[0] = q0i;
  for (int k = 1; k < n; ++k) {
    C s = f_zero<C>();
    for (int i = 1; i <= k && i < (int)q.size(); ++i) s += q[i] * r[k - i];
    r[k] = -(s * q0i);
  }
  return r;
}

// Multiply by a rational function of x: handles x-power content exactly.
template <class C>
LogSeries<C> mul_ratfunc(const LogSeries<C>& s, const RatFunc<Rat>& f)
{
  if (f.is_zero()) {
    LogSeries<C> z(s.rho, s.nvalid);
    return z;
  }
  int vn = 0, vd = 0;
  Poly<Rat> num = f.num, den = f.den;
  while (vn <= num.degree() && num[vn] == 0) ++vn;
  while (vd <= den.degree() && den[vd] == 0) ++vd;
  Poly<Rat> nn, dd;
  nn.c.assign(num.c.begin() + vn, num.c.end());
  dd.c.assign(den.c.begin() + vd, den.c.end());
  LogSeries<C> r(s.rho + Rat(vn - vd), s.nvalid);
  // multiply by nn
  for (int k = 0; k < (int)s.a.size(); ++k)
    for (int j = 0; j < (int)s.a[k].size(); ++j) {
      if (f_is_zero(s.a[k][j])) continue;
      for (int i = 0; i <= nn.degree() && k + i < r.nvalid; ++i) {
        if (nn[i] == 0) continue;
        r.add(k + i, j, s.a[k][j] * c_from_rat<C>(nn[i]));
      }
    }
  // multiply by 1/dd as a power series
  if (dd.degree() > 0) {
    std::vector<C> dc(dd.degree() + 1);
    for (int i = 0; i <= dd.degree(); ++i) dc[i] = c_from_rat<C>(dd[i]);
    auto inv = inverse_series(dc, r.nvalid);
    LogSeries<C> out(r.rho, r.nvalid);
    for (int k = 0; k < (int)r.a.size(); ++k)
      for (int j = 0; j < (int)r.a[k].size(); ++j) {
        if (f_is_zero(r.a[k][j])) continue;
        for (int i = 0; k + i < out.nvalid; ++i)
          if (!f_is_zero(inv[i])) out.add(k + i, j, r.a[k][j] * inv[i]);
      }
    out.normalize();
    return out;
  }
  if (dd.degree() == 0 && !(dd[0] == Rat(1))) {
    r = r * c_from_rat<C>(Rat(1) / dd[0]);
  }
  r.normalize();
  return r;
}

} // namespace scalform

#endif
