#ifndef SCALFORM_FITTING_HPP
#define SCALFORM_FITTING_HPP

#include <cmath>
#include <string>
#include <optional>
#include <vector>
#include "scalform/quadrature.hpp"
#include "scalform/tabulated.hpp"
#include "json.hpp"

namespace scalform {

// Fit I_n against a formal solution basis, recognize the constants in a small
// transcendental dictionary, cross-validate at held-out points.

struct FitConfig {
  bool derivative_mode = false; // default: q distinct matching points
  double x0 = 2.0;              // first matching point / derivative point
  double spacing = 0.5;
  QuadratureConfig quad;
};

struct Recognized {
  std::string text;
  double value = 0;
};

struct FitReport {
  int n = 0;
  std::vector<double> constants;
  std::vector<std::optional<Recognized>> recognized;
  std::vector<double> matching_points;
  double solve_residual = 0;     // linear system backsubstitution error
  double condition_estimate = 0; // max/min pivot magnitude
  std::vector<double> validation_points;
  double validation_residual = 0;
};

namespace detail {

inline bool lu_solve(std::vector<std::vector<double>> A, std::vector<double> b,
                     std::vector<double>& x, double& cond)
{
  int n = (int)A.size();
  std::vector<int> perm(n);
  double pmax = 0, pmin = 1e300;
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int c = 0; c < n; ++c) {
    int pr = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(A[r][c]) > std::abs(A[pr][c])) pr = r;
    std::swap(A[c], A[pr]);
    std::swap(b[c], b[pr]);
    double piv = A[c][c];
    if (piv == 0) return false;
    pmax = std::max(pmax, std::abs(piv));
    pmin = std::min(pmin, std::abs(piv));
    for (int r = c + 1; r < n; ++r) {
      double f = A[r][c] / piv;
      if (f == 0) continue;
      for (int k = c; k < n; ++k) A[r][k] -= f * A[c][k];
      b[r] -= f * b[c];
    }
  }
  x.assign(n, 0.0);
  for (int r = n - 1; r >= 0; --r) {
    double s = b[r];
    for (int k = r + 1; k < n; ++k) s -= A[r][k] * x[k];
    x[r] = s / A[r][r];
  }
  cond = pmax / pmin;
  return true;
}

} // namespace detail

// Bounded-rational dictionary over {1/pi^k} x {1, u, u^2} with u = 2 ln 2 - gamma.
struct ConstantDictionary {
  int max_pi_power = 4;
  long num_bound = 128;
  long quad_bound = 33;
  std::vector<long> denominators = {1, 2, 3, 4, 6, 8, 12, 16, 24, 48};
  double precision = 2e-6;
};

inline std::optional<Recognized> recognize(double value, const ConstantDictionary& dict)
{
  static const double PI = 3.14159265358979323846;
  static const double GAMMA = 0.57721566490153286061;
  static const double U = 2 * std::log(2.0) - GAMMA;
  if (!std::isfinite(value)) return std::nullopt;
  struct Cand {
    double err;
    long a, b, c, m;
    int k;
  };
  // Two tiers: simple combinations at the declared precision, ornate ones
  // (large multiples of 2ln2-g, large denominators) only when the match is
  // a hundredfold sharper. Keeps the dictionary's density from fabricating.
  auto scan = [&](bool tight, double thr) {
    std::vector<Cand> passing;
    for (int k = 0; k <= dict.max_pi_power; ++k) {
      double pik = std::pow(PI, k);
      double scaled0 = value * pik;
      if (std::abs(scaled0) > 4.0 * (double)dict.num_bound) continue;
      long brange = tight ? 7 : (k <= 2 ? dict.quad_bound : 7);
      long crange = tight ? 3 : (k <= 2 ? 5 : 3);
      if (k >= 3) { // high powers of pi make the grid dense; keep it sparse
        brange = 3;
        crange = 1;
      }
      for (long m : dict.denominators) {
        if (tight && m > 16) continue;
        if (k >= 3 && m > 8) continue;
        for (long b = -brange + 1; b < brange; ++b)
          for (long c = -crange + 1; c < crange; ++c) {
            double target = scaled0 * m - b * U - c * U * U;
            double a = std::round(target);
            if (std::abs(a) > (k >= 3 ? 16.0 : (double)dict.num_bound)) continue;
            long la = (long)a;
            auto gl = [](long x, long y) {
              x = std::labs(x);
              y = std::labs(y);
              while (y) { long t = x % y; x = y; y = t; }
              return x;
            };
            if (gl(gl(m, la), gl(b, c)) > 1) continue;
            double err = std::abs(target - a) / m / pik;
            if (err < thr) passing.push_back({err, la, b, c, m, k});
          }
      }
    }
    return passing;
  };
  auto pick = [&](std::vector<Cand> passing) -> std::optional<Cand> {
    if (passing.empty()) return std::nullopt;
    std::sort(passing.begin(), passing.end(), [](auto& x, auto& y) { return x.err < y.err; });
    if (passing.size() > 1 && passing[1].err <= 1000 * std::max(passing[0].err, 1e-15))
      return std::nullopt; // ambiguous, never fabricate
    return passing[0];
  };
  auto w = pick(scan(true, dict.precision));
  if (!w) w = pick(scan(false, dict.precision / 100));
  if (!w) return std::nullopt;
  auto frac = [&](long n) {
    std::string s = std::to_string(n);
    if (w->m != 1) s += "/" + std::to_string(w->m);
    return s;
  };
  std::string core;
  if (w->a) core += frac(w->a);
  if (w->b) core += std::string(core.empty() ? "" : " + ") + frac(w->b) + "*(2ln2-g)";
  if (w->c) core += std::string(core.empty() ? "" : " + ") + frac(w->c) + "*(2ln2-g)^2";
  if (core.empty()) core = "0";
  std::string txt = w->k ? ("(" + core + ")/pi^" + std::to_string(w->k)) : core;
  double v = (w->a + w->b * U + w->c * U * U) / w->m / std::pow(PI, w->k);
  return Recognized{txt, v};
}

// numeric evaluation of the basis members and their x-derivatives
inline double eval_member(const LogSeries<Rat>& s, double x, int deriv = 0)
{
  LogSeries<Rat> d = s;
  for (int i = 0; i < deriv; ++i) d = d.derivative();
  return d.eval_double(x);
}

inline FitReport fit_constants(int n, FitConfig cfg = {},
                               const ConstantDictionary& dict = {})
{
  auto basis = tabulated_basis(n);
  int q = (int)basis.size();
  FitReport rep;
  rep.n = n;
  std::vector<std::vector<double>> A(q, std::vector<double>(q));
  std::vector<double> b(q);
  if (cfg.derivative_mode) {
    rep.matching_points = {cfg.x0};
    for (int d = 0; d < q; ++d) {
      for (int j = 0; j < q; ++j) A[d][j] = eval_member(basis[j], cfg.x0, d);
      b[d] = eval_In(n, cfg.x0 / 2, cfg.quad, d).value;
    }
  } else {
    for (int p = 0; p < q; ++p) {
      double x = cfg.x0 + p * cfg.spacing;
      rep.matching_points.push_back(x);
      for (int j = 0; j < q; ++j) A[p][j] = eval_member(basis[j], x);
      b[p] = eval_In(n, x / 2, cfg.quad).value;
    }
  }
  std::vector<double> c;
  double cond = 0;
  if (!detail::lu_solve(A, b, c, cond)) throw std::runtime_error("singular fitting system");
  rep.constants = c;
  rep.condition_estimate = cond;
  double res = 0;
  for (int r = 0; r < q; ++r) {
    double s = -b[r];
    for (int j = 0; j < q; ++j) s += A[r][j] * c[j];
    res = std::max(res, std::abs(s));
  }
  rep.solve_residual = res;
  for (double v : c) rep.recognized.push_back(recognize(v, dict));
  return rep;
}

inline double cross_validate(int n, const std::vector<double>& constants,
                             const std::vector<double>& points, QuadratureConfig quad = {})
{
  auto basis = tabulated_basis(n);
  double worst = 0;
  for (double x : points) {
    double s = 0;
    for (size_t j = 0; j < basis.size(); ++j) s += constants[j] * eval_member(basis[j], x);
    double truth = eval_In(n, x / 2, quad).value;
    worst = std::max(worst, std::abs(s - truth));
  }
  return worst;
}

// Change of basis S~_i = sum_j M_ij S_j: constants transform by the inverse
// transpose so the reconstructed series is unchanged.
inline std::vector<double> basis_change(const std::vector<double>& constants,
                                        const Mat<Rat>& M)
{
  int q = M.rows;
  // solve M^T c~ = c exactly, then convert
  Mat<Rat> A(q, q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) A(i, j) = M(j, i);
  // double solve is fine for reporting; keep exact structure via Rat
  std::vector<std::vector<double>> Ad(q, std::vector<double>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) Ad[i][j] = to_double(A(i, j));
  std::vector<double> x;
  double cond;
  if (!detail::lu_solve(Ad, constants, x, cond)) throw std::runtime_error("singular transform");
  return x;
}

// Alternate two-particle basis: the published alternate constants
// (1/pi^2, (1-4ln2+2g)/pi^2, ...) determine this transform uniquely up to
// the scale of the last member; the combination row printed alongside those
// constants is inconsistent with them and is corrected here.
inline Mat<Rat> alternate_two_particle_transform()
{
  Mat<Rat> T(4, 4);
  T(0, 0) = rat(1, 2); T(0, 1) = rat(1, 2); T(0, 2) = rat(-57, 32); T(0, 3) = rat(65, 32);
  T(1, 1) = rat(1, 2); T(1, 2) = rat(39, 32); T(1, 3) = rat(-31, 32);
  T(2, 2) = rat(1, 2);
  T(3, 3) = rat(1, 2);
  return T;
}

inline nlohmann::json to_json(const FitReport& rep)
{
  nlohmann::json j;
  j["n"] = rep.n;
  j["constants"] = rep.constants;
  j["matching_points"] = rep.matching_points;
  j["solve_residual"] = rep.solve_residual;
  j["condition_estimate"] = rep.condition_estimate;
  j["validation_points"] = rep.validation_points;
  j["validation_residual"] = rep.validation_residual;
  nlohmann::json rec = nlohmann::json::array();
  for (auto& r : rep.recognized)
    rec.push_back(r ? nlohmann::json{{"form", r->text}, {"value", r->value}} : nlohmann::json());
  j["recognized"] = rec;
  return j;
}

} // namespace scalform

#endif
