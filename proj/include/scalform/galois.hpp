#ifndef SCALFORM_GALOIS_HPP
#define SCALFORM_GALOIS_HPP

#include <optional>
#include "scalform/diffop.hpp"
#include "scalform/squares.hpp"
#include "scalform/linalg.hpp"

namespace scalform {

// Differential Galois certificates: rational solutions of symmetric and
// exterior squares, invariant quadratic/alternating forms as first
// integrals, and the resulting symplectic/orthogonal classification.

// Ansatz for rational solutions: a fixed denominator and a numerator degree
// bound; the bounds come from the local exponents plus a safety margin.
template <class K>
struct RationalAnsatz {
  Poly<K> denominator{f_one<K>()};
  int numerator_degree = 50;
};

// All rational solutions P(x)/den with deg P <= bound, as a basis. Exact;
// an empty list is a valid outcome.
template <class K>
std::vector<RatFunc<K>> rational_solutions(const DiffOp<K>& op0, const RationalAnsatz<K>& ansatz)
{
  DiffOp<K> op = to_plain_basis(op0);
  int nb = ansatz.numerator_degree;
  // apply op to x^i / den for each i; collect into a common fraction.
  // op(x^i/den) = N_i(x) / D(x): share D across i by symbolic differentiation.
  // Work with the candidate as a RatFunc and collect numerator coefficients
  // over the common denominator: den^(order+1) * (op denominators cleared).
  PolyOp<K> P = to_polyop(op);
  int n = P.order();
  // images of basis candidates
  std::vector<Poly<K>> nums(nb + 1);
  Poly<K> common; // common denominator, computed on first use
  for (int i = 0; i <= nb; ++i) {
    RatFunc<K> cand(Poly<K>::monomial(f_one<K>(), i), ansatz.denominator);
    // derivatives of cand
    RatFunc<K> acc;
    RatFunc<K> dk = cand;
    for (int k = 0; k <= n; ++k) {
      if (!P.p[k].is_zero()) acc += RatFunc<K>(P.p[k]) * dk;
      if (k < n) dk = dk.derivative();
    }
    if (common.is_zero()) common = acc.den;
    // bring to the common denominator (first image's denominator)
    if (acc.den == common) {
      nums[i] = acc.num;
    } else {
      // fall back: cross-multiply into an updated common denominator
      Poly<K> g = poly_gcd(common, acc.den);
      Poly<K> extra = acc.den / g;
      common = common * extra;
      for (int t = 0; t < i; ++t) nums[t] = nums[t] * extra;
      nums[i] = acc.num * (common / acc.den);
    }
  }
  // linear system: sum c_i nums_i = 0 coefficient-wise
  int rows = 0;
  for (auto& p : nums) rows = std::max(rows, p.degree() + 1);
  Mat<K> A(rows, nb + 1);
  for (int i = 0; i <= nb; ++i)
    for (int r = 0; r < rows; ++r) A(r, i) = nums[i][r];
  auto null = nullspace(A);
  std::vector<RatFunc<K>> out;
  for (auto& v : null) {
    Poly<K> num;
    for (int i = 0; i <= nb; ++i)
      if (!f_is_zero(v[i])) num += Poly<K>::monomial(v[i], i);
    out.push_back(RatFunc<K>(num, ansatz.denominator));
  }
  return out;
}

// First-integral check: Q is a symmetric bilinear form on the jet
// (y, y', ..., y^(n-1)); it is invariant iff Q' + A^T Q + Q A = 0 with A the
// companion matrix of the (monic) operator.
template <class K>
bool invariant_form_check(const DiffOp<K>& op0, const Mat<RatFunc<K>>& Q)
{
  DiffOp<K> op = to_plain_basis(op0);
  int n = op.order();
  if (Q.rows != n || Q.cols != n) throw std::invalid_argument("form arity mismatch");
  // companion matrix
  Mat<RatFunc<K>> A(n, n);
  for (int i = 0; i + 1 < n; ++i) A(i, i + 1) = RatFunc<K>(f_one<K>());
  for (int k = 0; k < n; ++k) A(n - 1, k) = -(op.c[k] / op.c[n]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RatFunc<K> s = Q(i, j).derivative();
      for (int k = 0; k < n; ++k) s += A(k, i) * Q(k, j) + Q(i, k) * A(k, j);
      if (!s.is_zero()) return false;
    }
  return true;
}

// Derive the order-three operator with a given invariant quadratic form:
// the first-integral condition is linear in the monic coefficients.
template <class K>
DiffOp<K> operator_from_invariant_form(const Mat<RatFunc<K>>& Q, const std::string& var)
{
  int n = Q.rows;
  if (n != 3) throw std::invalid_argument("implemented for order three");
  using F = RatFunc<K>;
  // unknown companion last row entries r0, r1, r2 (A(2,k) = -r_k)
  // condition: Q' + A^T Q + Q A = 0; split A = S + e_n r^T-part
  // Build the linear system over F in (r0, r1, r2).
  Mat<F> shift(n, n);
  for (int i = 0; i + 1 < n; ++i) shift(i, i + 1) = F(f_one<K>());
  // base = Q' + shift^T Q + Q shift
  Mat<F> base(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      F s = Q(i, j).derivative();
      for (int k = 0; k < n; ++k) s += shift(k, i) * Q(k, j) + Q(i, k) * shift(k, j);
      base(i, j) = s;
    }
  // r-part: A(n-1, k) = -r_k adds -r_k (Q(n-1, j) delta_{i k} + Q(i, n-1) delta_{j k})
  // equations indexed by (i <= j)
  std::vector<std::array<int, 2>> eqs;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) eqs.push_back({i, j});
  Mat<F> M((int)eqs.size(), n);
  std::vector<F> rhs((int)eqs.size());
  for (size_t e = 0; e < eqs.size(); ++e) {
    auto [i, j] = eqs[e];
    rhs[e] = -base(i, j);
    for (int k = 0; k < n; ++k) {
      F coef;
      if (k == i) coef += Q(n - 1, j);
      if (k == j) coef += Q(i, n - 1);
      M((int)e, k) = -coef;
    }
  }
  std::vector<F> r;
  if (!solve_linear(M, rhs, r))
    throw std::runtime_error("invariant form does not determine an operator");
  std::vector<F> c{r[0], r[1], r[2], F(f_one<K>())};
  return DiffOp<K>(var, std::move(c));
}

enum class GaloisClass { Orthogonal, Symplectic, None };

struct GaloisCertificate {
  GaloisClass cls = GaloisClass::None;
  std::vector<RatFunc<Rat>> witnesses;
};

// Classification at the scaled point: orthogonal when the symmetric square
// admits a rational solution, symplectic when the exterior square does.
// The order-one exterior square of a second-order operator is only the
// Wronskian line and certifies nothing, hence the explicit exclusion.
inline GaloisCertificate classify(const DiffOp<Rat>& op, const RationalAnsatz<Rat>& ansatz)
{
  GaloisCertificate cert;
  {
    auto s2 = sym_square(op);
    auto sols = rational_solutions(s2, ansatz);
    if (!sols.empty()) {
      cert.cls = GaloisClass::Orthogonal;
      cert.witnesses = sols;
      return cert;
    }
  }
  {
    auto e2 = ext_square(op);
    if (e2.order() >= 2) {
      auto sols = rational_solutions(e2, ansatz);
      if (!sols.empty()) {
        cert.cls = GaloisClass::Symplectic;
        cert.witnesses = sols;
        return cert;
      }
    }
  }
  return cert;
}

} // namespace scalform

#endif
