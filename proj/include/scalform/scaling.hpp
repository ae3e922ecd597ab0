#ifndef SCALFORM_SCALING_HPP
#define SCALFORM_SCALING_HPP

#include <limits>
#include "scalform/diffop.hpp"
#include "scalform/operators.hpp"

namespace scalform {

// The joint limit t -> 1, N -> infinity at fixed scaling variable:
//   diagonal       t = 1 - x/N      (D_t = -N D_x)
//   next-diagonal  s = 1 - x/(4N)   (D_s = -4N D_x)
struct ScalingSpec {
  enum class Kind { Diagonal, NextDiagonal } kind = Kind::Diagonal;
};

namespace detail {

inline long n_degree(const QN& q)
{
  if (q.is_zero()) throw std::domain_error("n_degree of zero");
  return q.num.degree() - q.den.degree();
}
inline Rat n_leadcoeff(const QN& q) { return q.num.lead() / q.den.lead(); }

} // namespace detail

// Substitute, expand around N = infinity, keep the jointly leading N-order,
// strip content. Throws if the result degenerates to zero.
inline DiffOp<Rat> scaling_limit(const DiffOp<QN>& op0, ScalingSpec spec)
{
  DiffOp<QN> op = to_plain_basis(op0);
  if (op.is_zero()) throw std::invalid_argument("scaling_limit of zero operator");
  long mult = spec.kind == ScalingSpec::Kind::Diagonal ? 1 : 4;
  QN minus_inv(Poly<Rat>(Rat(-1)), Poly<Rat>::x() * Rat(mult)); // -1/(mult N)
  QN one(Poly<Rat>(Rat(1)));
  QN negN = QN(Poly<Rat>::x() * Rat(-mult)); // D_v = -mult N D_x

  struct Term {
    bool present = false;
    long grade = 0;
    Poly<Rat> num, den; // leading x-rational function at that grade
  };
  std::vector<Term> terms(op.c.size());
  long gmax = std::numeric_limits<long>::min();
  for (size_t k = 0; k < op.c.size(); ++k) {
    if (op.c[k].is_zero()) continue;
    RatFunc<QN> sub = op.c[k].compose_affine(one, minus_inv);
    QN fac(Poly<Rat>(Rat(1)));
    for (size_t i = 0; i < k; ++i) fac = fac * negN;
    sub = sub * RatFunc<QN>(fac);
    auto lead_part = [](const Poly<QN>& p, long& g, Poly<Rat>& lp) {
      g = std::numeric_limits<long>::min();
      for (int i = 0; i <= p.degree(); ++i)
        if (!p[i].is_zero()) g = std::max(g, detail::n_degree(p[i]));
      lp = Poly<Rat>();
      for (int i = 0; i <= p.degree(); ++i)
        if (!p[i].is_zero() && detail::n_degree(p[i]) == g)
          lp.coeff(i) = detail::n_leadcoeff(p[i]);
      lp.trim();
    };
    long gn, gd;
    Term t;
    lead_part(sub.num, gn, t.num);
    lead_part(sub.den, gd, t.den);
    t.grade = gn - gd;
    t.present = true;
    terms[k] = std::move(t);
    gmax = std::max(gmax, terms[k].grade);
  }
  std::vector<QX> out(op.c.size());
  for (size_t k = 0; k < terms.size(); ++k) {
    if (!terms[k].present || terms[k].grade != gmax) continue;
    out[k] = QX(terms[k].num, terms[k].den);
  }
  DiffOp<Rat> r("x", std::move(out));
  if (r.is_zero()) throw std::runtime_error("scaling limit degenerated to zero");
  return normalized_primitive(r);
}

// Scaling limit of a gcd-free operator: substitute into the polynomial data,
// compare the joint leading N-order of numerators against the denominator.
inline DiffOp<Rat> scaling_limit(const PolyOp<QN>& op, ScalingSpec spec)
{
  long mult = spec.kind == ScalingSpec::Kind::Diagonal ? 1 : 4;
  QN minus_inv(Poly<Rat>(Rat(-1)), Poly<Rat>::x() * Rat(mult));
  QN one(Poly<Rat>(Rat(1)));
  QN negN = QN(Poly<Rat>::x() * Rat(-mult));

  auto lead_part = [](const Poly<QN>& p, long& g, Poly<Rat>& lp) {
    g = std::numeric_limits<long>::min();
    for (int i = 0; i <= p.degree(); ++i)
      if (!p[i].is_zero()) g = std::max(g, detail::n_degree(p[i]));
    lp = Poly<Rat>();
    for (int i = 0; i <= p.degree(); ++i)
      if (!p[i].is_zero() && detail::n_degree(p[i]) == g)
        lp.coeff(i) = detail::n_leadcoeff(p[i]);
    lp.trim();
  };

  Poly<QN> den_sub = op.den.compose_affine(one, minus_inv);
  long gden;
  Poly<Rat> den_lead;
  lead_part(den_sub, gden, den_lead);

  struct Term {
    bool present = false;
    long grade = 0;
    Poly<Rat> num;
  };
  std::vector<Term> terms(op.p.size());
  long gmax = std::numeric_limits<long>::min();
  QN fac(Poly<Rat>(Rat(1)));
  for (size_t k = 0; k < op.p.size(); ++k) {
    if (!op.p[k].is_zero()) {
      Poly<QN> sub = op.p[k].compose_affine(one, minus_inv) * fac;
      long gn;
      Term t;
      lead_part(sub, gn, t.num);
      t.grade = gn - gden;
      t.present = true;
      terms[k] = std::move(t);
      gmax = std::max(gmax, terms[k].grade);
    }
    fac = fac * negN;
  }
  std::vector<QX> out(op.p.size());
  for (size_t k = 0; k < terms.size(); ++k) {
    if (!terms[k].present || terms[k].grade != gmax) continue;
    out[k] = QX(terms[k].num, den_lead);
  }
  DiffOp<Rat> r("x", std::move(out));
  if (r.is_zero()) throw std::runtime_error("scaling limit degenerated to zero");
  return normalized_primitive(r);
}

} // namespace scalform

#endif
