#ifndef SCALFORM_BIGRAT_HPP
#define SCALFORM_BIGRAT_HPP

#include <gmpxx.h>
#include <string>
#include <cstdint>
#include <stdexcept>

namespace scalform {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1)
{
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat rat(const Int& num, const Int& den)
{
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Parses an integer or "a/b" in base 10.
inline Rat rat_from_string(const std::string& s)
{
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  Rat q(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rat& q)
{
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Int ipow(Int base, unsigned long e)
{
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rat qpow(const Rat& base, long e)
{
  if (e == 0) return Rat(1);
  if (base == 0) {
    if (e < 0) throw std::domain_error("qpow: 0^negative");
    return Rat(0);
  }
  Rat r;
  unsigned long ae = (unsigned long)(e < 0 ? -e : e);
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), ae);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), ae);
  if (e < 0) {
    Rat inv;
    mpq_inv(inv.get_mpq_t(), r.get_mpq_t());
    return inv;
  }
  return r;
}

inline Int factorial(unsigned long n)
{
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Int binomial(unsigned long n, unsigned long k)
{
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline double to_double(const Rat& q) { return q.get_d(); }

// True if q = p^k * m fully; returns exponent of prime p in q's numerator minus denominator.
inline long padic_val(const Rat& q, unsigned long p)
{
  if (q == 0) throw std::domain_error("padic_val of zero");
  long v = 0;
  Int n = q.get_num(), d = q.get_den(), r, quo;
  Int pp(p);
  while (true) {
    mpz_fdiv_qr(quo.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), pp.get_mpz_t());
    if (r != 0) break;
    n = quo; ++v;
  }
  while (true) {
    mpz_fdiv_qr(quo.get_mpz_t(), r.get_mpz_t(), d.get_mpz_t(), pp.get_mpz_t());
    if (r != 0) break;
    d = quo; --v;
  }
  return v;
}

} // namespace scalform

#endif
