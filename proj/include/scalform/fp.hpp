#ifndef SCALFORM_FP_HPP
#define SCALFORM_FP_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>
#include "scalform/bigrat.hpp"

namespace scalform {

namespace detail {
inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t p)
{
  if ((a | b) < (1ull << 32)) return (a * b) % p;
  return (uint64_t)((__uint128_t)a * b % p);
}
inline uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t p)
{
  uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, p);
    a = mulmod_u64(a, a, p);
    e >>= 1;
  }
  return r;
}
} // namespace detail

inline bool is_prime_u64(uint64_t n)
{
  if (n < 2) return false;
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  // Deterministic Miller-Rabin witnesses for 64-bit range.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = detail::powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int i = 1; i < s; ++i) {
      x = detail::mulmod_u64(x, x, n);
      if (x == n - 1) { comp = false; break; }
    }
    if (comp) return false;
  }
  return true;
}

// Prime field element with a global runtime modulus. The modulus is switched
// between computation phases, never concurrently with arithmetic.
struct Fp {
  uint64_t v = 0;

  static uint64_t& modulus()
  {
    static uint64_t p = 0;
    return p;
  }
  static void set_modulus(uint64_t p)
  {
    if (!is_prime_u64(p)) throw std::invalid_argument("Fp: modulus not prime");
    modulus() = p;
  }

  Fp() = default;
  explicit Fp(uint64_t x) : v(x % modulus()) {}
  explicit Fp(int x) { *this = from_int(x); }
  explicit Fp(long x) { *this = from_int(x); }
  explicit Fp(long long x) { *this = from_int(x); }
  static Fp from_int(long long x)
  {
    uint64_t p = modulus();
    long long m = x % (long long)p;
    if (m < 0) m += (long long)p;
    Fp r;
    r.v = (uint64_t)m;
    return r;
  }

  static Fp raw(uint64_t reduced)
  {
    Fp r;
    r.v = reduced;
    return r;
  }
  friend Fp operator+(Fp a, Fp b)
  {
    uint64_t s = a.v + b.v;
    if (s >= modulus()) s -= modulus();
    return raw(s);
  }
  friend Fp operator-(Fp a, Fp b)
  {
    uint64_t s = a.v >= b.v ? a.v - b.v : a.v + modulus() - b.v;
    return raw(s);
  }
  friend Fp operator*(Fp a, Fp b) { return raw(detail::mulmod_u64(a.v, b.v, modulus())); }
  Fp operator-() const { return v == 0 ? *this : raw(modulus() - v); }
  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator-=(Fp b) { return *this = *this - b; }
  Fp& operator*=(Fp b) { return *this = *this * b; }
  friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
  friend bool operator!=(Fp a, Fp b) { return a.v != b.v; }

  Fp inv() const
  {
    if (v == 0) throw std::domain_error("Fp: inverse of zero");
    return raw(detail::powmod_u64(v, modulus() - 2, modulus()));
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }
  bool is_zero() const { return v == 0; }
};

// Reduction of an exact rational mod p. Throws if the denominator vanishes.
struct BadPrime : std::runtime_error {
  BadPrime() : std::runtime_error("denominator divisible by the prime; pick another prime") {}
};

inline Fp reduce_mod_p(const Rat& q, uint64_t p)
{
  if (Fp::modulus() != p) Fp::set_modulus(p);
  Int n = q.get_num() % Int((unsigned long)p);
  Int d = q.get_den() % Int((unsigned long)p);
  uint64_t du = mpz_get_ui(d.get_mpz_t());
  if (du % p == 0) throw BadPrime();
  long ns = mpz_get_si(n.get_mpz_t());
  Fp fn = Fp::from_int(ns);
  return fn / Fp{du % p};
}

// Rational reconstruction: finds n/d = a (mod p) with |n|, d <= sqrt(p/2).
// Returns false when no such small fraction exists.
inline bool rational_reconstruct(uint64_t a, uint64_t p, Int& num, Int& den)
{
  Int r0((unsigned long)p), r1((unsigned long)a);
  Int s0(0), s1(1);
  Int bound;
  mpz_sqrt(bound.get_mpz_t(), Int((unsigned long)(p / 2)).get_mpz_t());
  while (r1 > bound) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  if (s1 == 0) return false;
  Int d = s1 < 0 ? Int(-s1) : s1;
  Int n = s1 < 0 ? Int(-r1) : r1;
  if (d > bound) return false;
  Int g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (g != 1) return false;
  num = n;
  den = d;
  return true;
}

inline bool rational_reconstruct(Fp a, Int& num, Int& den)
{
  return rational_reconstruct(a.v, Fp::modulus(), num, den);
}

} // namespace scalform

#endif
