#ifndef SCALFORM_SPECIALFUN_HPP
#define SCALFORM_SPECIALFUN_HPP

#include <cmath>
#include <stdexcept>
#include "scalform/logseries.hpp"

namespace scalform {

// Modified Bessel pair in the scaling variable: series at x = 0 for
//   B0 = I_0(x/2), B1 = I_1(x/2) = d/dx [2 B0],
//   K0hat = -ln(x) B0 + H(x)  (rational log partner; the Macdonald function
//   at argument x/2 is K0hat + (2 ln 2 - gamma) B0),
//   K1hat = d/dx [-2 K0hat].
// All four satisfy the operator D^2 + (1/x) D - 1/4 pairing.

inline LogSeries<Rat> bessel_b0_series(int order = 60)
{
  LogSeries<Rat> s(Rat(0), order);
  Rat c(1);
  s.set(0, 0, c);
  for (int k = 1; 2 * k < order; ++k) {
    c /= Rat(16) * Rat(k) * Rat(k);
    s.set(2 * k, 0, c);
  }
  return s;
}

inline LogSeries<Rat> bessel_b1_series(int order = 60)
{
  return bessel_b0_series(order + 1).derivative() * Rat(2);
}

inline LogSeries<Rat> bessel_k0hat_series(int order = 60)
{
  LogSeries<Rat> s(Rat(0), order);
  Rat c(1), h(0);
  for (int k = 0; 2 * k < order; ++k) {
    if (k > 0) {
      c /= Rat(16) * Rat(k) * Rat(k);
      h += rat(1, k);
    }
    s.set(2 * k, 1, -c);   // -ln(x) B0
    if (k > 0) s.set(2 * k, 0, c * h);
  }
  return s;
}

inline LogSeries<Rat> bessel_k1hat_series(int order = 60)
{
  return bessel_k0hat_series(order + 1).derivative() * Rat(-2);
}

enum class BesselKind { B0, B1, K0, K1 };

inline LogSeries<Rat> bessel_series(BesselKind kind, int order = 60)
{
  switch (kind) {
    case BesselKind::B0: return bessel_b0_series(order);
    case BesselKind::B1: return bessel_b1_series(order);
    case BesselKind::K0: return bessel_k0hat_series(order);
    case BesselKind::K1: return bessel_k1hat_series(order);
  }
  throw std::logic_error("bessel_series: bad kind");
}

// ---- numeric evaluators on r > 0 ------------------------------------------

inline double bessel_i0_num(double r)
{
  double term = 1, sum = 1, q = r * r / 4;
  for (int k = 1; k < 200; ++k) {
    term *= q / (k * (double)k);
    sum += term;
    if (term < 1e-19 * std::abs(sum)) break;
  }
  return sum;
}

inline double bessel_i1_num(double r)
{
  double term = r / 2, sum = term, q = r * r / 4;
  for (int k = 1; k < 200; ++k) {
    term *= q / (k * (k + 1.0));
    sum += term;
    if (term < 1e-19 * std::abs(sum)) break;
  }
  return sum;
}

// Oracle: K_0(r) = int_0^inf exp(-r cosh u) du, evaluated by the trapezoid
// rule on the even extension (superexponential convergence).
inline double k0_integral_oracle(double r, double h = 0.02)
{
  if (r <= 0) throw std::domain_error("bessel argument must be positive");
  double U = std::acosh(std::max(50.0 / r, 2.0)) + 1.0;
  double sum = 0.5; // u = 0 term of exp(-r cosh u)/exp(-r)
  long n = (long)(U / h) + 1;
  for (long i = 1; i <= n; ++i) sum += std::exp(-r * (std::cosh(i * h) - 1.0));
  return h * sum * std::exp(-r);
}

inline double k1_integral_oracle(double r, double h = 0.02)
{
  if (r <= 0) throw std::domain_error("bessel argument must be positive");
  double U = std::acosh(std::max(50.0 / r, 2.0)) + 1.0;
  double sum = 0.5;
  long n = (long)(U / h) + 1;
  for (long i = 1; i <= n; ++i) sum += std::cosh(i * h) * std::exp(-r * (std::cosh(i * h) - 1.0));
  return h * sum * std::exp(-r);
}

// The constant c with K_0(x/2) = K0hat(x) + c B0(x), fixed by matching the
// integral representation at r = 1 instead of hard-coding 2 ln 2 - gamma.
inline double macdonald_constant()
{
  static double c = [] {
    double r = 1.0;
    auto hat = bessel_k0hat_series(60);
    double x = 2 * r;
    return (k0_integral_oracle(r, 0.01) - hat.eval_double(x)) / bessel_i0_num(r);
  }();
  return c;
}

inline double bessel_k0_num(double r)
{
  if (r <= 0) throw std::domain_error("bessel argument must be positive");
  if (r >= 2) return k0_integral_oracle(r, 0.01);
  static auto hat = bessel_k0hat_series(80);
  return hat.eval_double(2 * r) + macdonald_constant() * bessel_i0_num(r);
}

inline double bessel_k1_num(double r)
{
  if (r <= 0) throw std::domain_error("bessel argument must be positive");
  if (r >= 2) return k1_integral_oracle(r, 0.01);
  static auto hat1 = bessel_k1hat_series(80);
  // K_1(x/2) = K1hat(x) - c B1(x)
  return hat1.eval_double(2 * r) - macdonald_constant() * bessel_i1_num(r);
}

inline double bessel_num(BesselKind kind, double r)
{
  switch (kind) {
    case BesselKind::B0: return bessel_i0_num(r);
    case BesselKind::B1: return bessel_i1_num(r);
    case BesselKind::K0: return bessel_k0_num(r);
    case BesselKind::K1: return bessel_k1_num(r);
  }
  throw std::logic_error("bessel_num: bad kind");
}

// ---- complete elliptic integrals as exact series in t ----------------------

enum class EllipticKind { K, E };

// K = 2F1(1/2, 1/2; 1; t), E = 2F1(1/2, -1/2; 1; t) via the Pochhammer
// recurrence, exact coefficients.
inline LogSeries<Rat> elliptic_series(EllipticKind kind, int order = 60)
{
  LogSeries<Rat> s(Rat(0), order);
  Rat c(1);
  s.set(0, 0, c);
  for (int k = 0; k + 1 < order; ++k) {
    Rat second = Rat(k) + (kind == EllipticKind::K ? rat(1, 2) : rat(-1, 2));
    Rat num = (Rat(k) + rat(1, 2)) * second;
    c *= num / (Rat(k + 1) * Rat(k + 1));
    s.set(k + 1, 0, c);
  }
  return s;
}

// prod_{j=1}^k Gamma(j)^2 = prod_{j=1}^k ((j-1)!)^2, exact.
inline Rat gamma_product(int k)
{
  if (k < 1) throw std::domain_error("gamma_product needs k >= 1");
  Int p(1);
  for (int j = 1; j <= k; ++j) {
    Int f = factorial(j - 1);
    p *= f * f;
  }
  return Rat(p);
}

} // namespace scalform

#endif
