#ifndef SCALFORM_QUADRATURE_HPP
#define SCALFORM_QUADRATURE_HPP

#include <cmath>
#include <vector>
#include <atomic>
#include <stdexcept>
#include "scalform/threadpool.hpp"
#include "scalform/diffop.hpp"

namespace scalform {

// Numeric evaluation of the n-particle integrals: after u = e^v the measure
// becomes prod tanh^2((v_i-v_j)/2) exp(-r sum cosh v_i) dv / (2 pi)^n / n!,
// a smooth integrand with controllable exponential truncation. Tensor-product
// Gauss-Legendre panels; identical configurations sum in a fixed order, so
// results are bit-reproducible and independent of the worker count.

struct QuadratureConfig {
  int nodes_per_axis = 0;   // 0: pick the default for the dimension
  int panels = 8;
  double tail_eps = 1e-18;  // exp(-r cosh V) below this at the cut V
  int refine_factor = 2;    // node multiplier for the error estimate
};

struct QuadratureEstimate {
  double value = 0;
  double error_estimate = 0;
  int nodes_per_axis = 0;
  std::string rule = "gauss-legendre-panels";
};

namespace detail {

inline void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w)
{
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double p0, p1, dp;
    for (int it = 0; it < 100; ++it) {
      p0 = 1.0;
      p1 = t;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (t * p1 - p0) / (t * t - 1.0);
      double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-16) break;
    }
    x[i] = -t;
    x[n - 1 - i] = t;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - t * t) * dp * dp);
  }
}

struct Grid {
  std::vector<double> v, w; // nodes and weights on [-V, V]
};

inline Grid build_grid(double r, int nodes, int panels, double tail_eps)
{
  double target = -std::log(tail_eps);
  double V = std::acosh(std::max(target / r, 2.0)) + 0.5;
  int per_panel = std::max(2, nodes / panels);
  std::vector<double> gx, gw;
  gauss_legendre(per_panel, gx, gw);
  Grid g;
  double h = 2 * V / panels;
  for (int p = 0; p < panels; ++p) {
    double a = -V + p * h;
    for (int i = 0; i < per_panel; ++i) {
      g.v.push_back(a + 0.5 * h * (gx[i] + 1.0));
      g.w.push_back(0.5 * h * gw[i]);
    }
  }
  return g;
}

// weight per node: w * exp(-r cosh v) / (2 pi); cosh table alongside
struct Axis {
  std::vector<double> ew, ch;
};

inline Axis axis_tables(const Grid& g, double r)
{
  Axis a;
  size_t m = g.v.size();
  a.ew.resize(m);
  a.ch.resize(m);
  for (size_t i = 0; i < m; ++i) {
    a.ch[i] = std::cosh(g.v[i]);
    a.ew[i] = g.w[i] * std::exp(-r * a.ch[i]) / (2 * M_PI);
  }
  return a;
}

inline std::vector<double> pair_table(const Grid& g)
{
  size_t m = g.v.size();
  std::vector<double> T(m * m);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      double t = std::tanh(0.5 * (g.v[i] - g.v[j]));
      T[i * m + j] = t * t;
    }
  return T;
}

// deriv_k: multiply the integrand by (-(ch_1+...+ch_n)/2)^k (the derivative
// in the scaling variable x = 2r enters only through the exponential).
inline double tuple_sum(int n, const Grid& g, const Axis& ax, const std::vector<double>& T,
                        int deriv_k)
{
  size_t m = g.v.size();
  auto powk = [&](double s) {
    double p = 1;
    for (int i = 0; i < deriv_k; ++i) p *= -0.5 * s;
    return p;
  };
  if (n == 1) {
    double acc = 0;
    for (size_t i = 0; i < m; ++i) acc += ax.ew[i] * powk(ax.ch[i]);
    return acc;
  }
  if (n == 2) {
    // strictly increasing pairs, multiplied by 2! (the diagonal vanishes)
    int chunks = 64;
    return parallel_chunks<double>(
        chunks,
        [&](int c) {
          double acc = 0;
          for (size_t i = c; i < m; i += chunks)
            for (size_t j = i + 1; j < m; ++j)
              acc += ax.ew[i] * ax.ew[j] * T[i * m + j] * powk(ax.ch[i] + ax.ch[j]);
          return acc;
        },
        [](double a, double b) { return a + b; }, 0.0) * 2.0;
  }
  if (n == 3) {
    int chunks = 64;
    return parallel_chunks<double>(
               chunks,
               [&](int c) {
                 double acc = 0;
                 for (size_t i = c; i < m; i += chunks)
                   for (size_t j = i + 1; j < m; ++j) {
                     double wij = ax.ew[i] * ax.ew[j] * T[i * m + j];
                     double cij = ax.ch[i] + ax.ch[j];
                     for (size_t k = j + 1; k < m; ++k)
                       acc += wij * ax.ew[k] * T[i * m + k] * T[j * m + k] * powk(cij + ax.ch[k]);
                   }
                 return acc;
               },
               [](double a, double b) { return a + b; }, 0.0) *
           6.0;
  }
  if (n == 4) {
    int chunks = 64;
    return parallel_chunks<double>(
               chunks,
               [&](int c) {
                 double acc = 0;
                 for (size_t i = c; i < m; i += chunks)
                   for (size_t j = i + 1; j < m; ++j) {
                     double wij = ax.ew[i] * ax.ew[j] * T[i * m + j];
                     double cij = ax.ch[i] + ax.ch[j];
                     for (size_t k = j + 1; k < m; ++k) {
                       double wijk = wij * ax.ew[k] * T[i * m + k] * T[j * m + k];
                       double cijk = cij + ax.ch[k];
                       for (size_t l = k + 1; l < m; ++l)
                         acc += wijk * ax.ew[l] * T[i * m + l] * T[j * m + l] * T[k * m + l] *
                                powk(cijk + ax.ch[l]);
                     }
                   }
                 return acc;
               },
               [](double a, double b) { return a + b; }, 0.0) *
           24.0;
  }
  throw std::invalid_argument("dimension budget: n <= 4");
}

} // namespace detail

inline int default_nodes(int n)
{
  if (n <= 2) return 192;
  if (n == 3) return 96;
  return 48;
}

// value of I_n(r) (or its deriv_k-th derivative in x = 2r when deriv_k > 0)
inline QuadratureEstimate eval_In(int n, double r, QuadratureConfig cfg = {}, int deriv_k = 0)
{
  if (n < 1 || n > 4) throw std::invalid_argument("dimension budget: 1 <= n <= 4");
  if (r <= 0) throw std::invalid_argument("r must be positive");
  int nodes = cfg.nodes_per_axis ? cfg.nodes_per_axis : default_nodes(n);
  auto run = [&](int nd) {
    auto grid = detail::build_grid(r, nd, cfg.panels, cfg.tail_eps);
    auto ax = detail::axis_tables(grid, r);
    auto T = detail::pair_table(grid);
    double fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    return detail::tuple_sum(n, grid, ax, T, deriv_k) / fact;
  };
  QuadratureEstimate est;
  est.nodes_per_axis = nodes;
  est.value = run(nodes);
  double coarse = run(std::max(8, nodes / cfg.refine_factor));
  est.error_estimate = std::abs(est.value - coarse) + 1e-15 * std::abs(est.value);
  return est;
}

inline std::vector<QuadratureEstimate> eval_In_derivs(int n, double r, int kmax,
                                                      QuadratureConfig cfg = {})
{
  std::vector<QuadratureEstimate> out;
  for (int k = 0; k <= kmax; ++k) out.push_back(eval_In(n, r, cfg, k));
  return out;
}

struct AnnihilationResult {
  double x = 0;
  double residual = 0;
  double scale = 0; // largest contributing term, for tolerance scaling
};

// Apply an operator in the scaling variable x = 2r to I_n under the integral
// sign: the k-th derivative multiplies the integrand by (-(1/2) sum cosh)^k.
inline std::vector<AnnihilationResult> annihilation_check(const DiffOp<Rat>& op0, int n,
                                                          const std::vector<double>& xs,
                                                          QuadratureConfig cfg = {})
{
  DiffOp<Rat> op = to_plain_basis(op0);
  std::vector<AnnihilationResult> out;
  for (double x : xs) {
    double r = x / 2;
    AnnihilationResult res;
    res.x = x;
    for (int k = 0; k <= op.order(); ++k) {
      if (op.c[k].is_zero()) continue;
      double ck = 0;
      {
        double num = 0, den = 0, xp = 1;
        for (int i = 0; i <= op.c[k].num.degree(); ++i) {
          num += to_double(op.c[k].num[i]) * xp;
          xp *= x;
        }
        xp = 1;
        for (int i = 0; i <= op.c[k].den.degree(); ++i) {
          den += to_double(op.c[k].den[i]) * xp;
          xp *= x;
        }
        ck = num / den;
      }
      double dk = eval_In(n, r, cfg, k).value;
      double term = ck * dk;
      res.residual += term;
      res.scale = std::max(res.scale, std::abs(term));
    }
    out.push_back(res);
  }
  return out;
}

} // namespace scalform

#endif
