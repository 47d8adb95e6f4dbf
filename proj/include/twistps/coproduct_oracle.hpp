#pragma once

#include "poincare.hpp"

#include <optional>
#include <string>
#include <vector>

namespace twistps {

/// How the free indices (i, j, k, l) of the psi/chi symbols in the printed
/// M-coproduct are tied to (mu, nu, alpha, beta). The printed formula does
/// not say; each reading is a hypothesis tested against the conjugation.
struct PsiChiReading {
  bool swap_mu_nu = false;        // (i, j) = (nu, mu) instead of (mu, nu)
  bool swap_alpha_beta = false;   // (k, l) = (beta, alpha) instead of (alpha, beta)

  std::string name() const {
    std::string ij = swap_mu_nu ? "(i,j)=(nu,mu)" : "(i,j)=(mu,nu)";
    std::string kl = swap_alpha_beta ? "(k,l)=(beta,alpha)" : "(k,l)=(alpha,beta)";
    return ij + "," + kl;
  }

  static std::vector<PsiChiReading> all() { return {{false, false}, {true, false}, {false, true}, {true, true}}; }
};

/// Result of expanding a printed closed-form coproduct.
struct ClosedCoproduct {
  TensorExpr value;
  /// Part of `value` coming from terms with an ambiguous index convention.
  TensorExpr ambiguous_part;
  bool ambiguous = false;
};

namespace detail {

/// sum over n of coeff(n) (i^gamma s)^n Z^n / n!, restricted to the given parity.
inline NCExpr carrier_function(const TwistCarrier& c, int order, bool odd, bool skip_zero) {
  const RewriteRuleset rules = classical_rules(order);
  const NCExpr z = carrier_momentum(c, order);
  NCExpr power = NCExpr::constant(order, 1);
  NCExpr out(order);
  for (int n = 0; n <= order; ++n) {
    if (n > 0) power = mul(power, z, rules);
    if ((n % 2 == 1) != odd || (n == 0 && skip_zero)) continue;
    Scalar coeff = i_pow(c.gamma_exp * n) * Scalar(Rational(1) / factorial(static_cast<unsigned>(n)));
    out += power * DeformSeries::monomial(order, n, coeff);
  }
  return out;
}

}  // namespace detail

/// (-i)^gamma sinh(i^gamma s zeta.P)
inline NCExpr carrier_sinh(const TwistCarrier& c, int order) {
  return i_pow(-c.gamma_exp) * detail::carrier_function(c, order, true, false);
}

/// cosh(i^gamma s zeta.P) - 1
inline NCExpr carrier_cosh_minus_one(const TwistCarrier& c, int order) {
  return detail::carrier_function(c, order, false, true);
}

/// Printed closed form of Delta_xi(P_mu), expanded in s.
inline TensorExpr closed_coproduct_P(int mu, const TwistCarrier& c, int order) {
  const int al = c.alpha, be = c.beta;
  auto eta = [](int a, int b) { return Scalar(Metric::eta(a, b)); };
  auto P = [&](int m) { return NCExpr::generator(order, Generator::P(m)); };
  NCExpr rot = eta(al, mu) * P(be) - eta(be, mu) * P(al);
  NCExpr diag = eta(al, al) * eta(al, mu) * P(al) + eta(be, be) * eta(be, mu) * P(be);
  return primitive_coproduct(Generator::P(mu), order) + wedge(carrier_sinh(c, order), rot) +
         perp(carrier_cosh_minus_one(c, order), diag);
}

/// Printed closed form of Delta_xi(M_{mu nu}) under a chosen psi/chi reading.
inline ClosedCoproduct closed_coproduct_M(int mu, int nu, const TwistCarrier& c, int order,
                                        PsiChiReading reading = {}) {
  const RewriteRuleset rules = classical_rules(order);
  const int al = c.alpha, be = c.beta;
  auto eta = [](int a, int b) { return Scalar(Metric::eta(a, b)); };
  auto P = [&](int m) { return NCExpr::generator(order, Generator::P(m)); };
  const NCExpr s1 = NCExpr::word(order, {}, DeformSeries::monomial(order, 1, 1));  // s
  const NCExpr mab = carrier_rotation(c, order);
  const NCExpr mmn = M(order, mu, nu);
  const NCExpr sh = carrier_sinh(c, order);
  const NCExpr ch = carrier_cosh_minus_one(c, order);
  const Scalar sign_ch = (c.gamma_exp % 2 == 0) ? Scalar(-1) : Scalar(1);  // (-1)^(1+gamma)

  NCExpr zeta_term(order);  // zeta^lambda (eta_{mu lambda} P_nu - eta_{nu lambda} P_mu)
  for (int la = 0; la < 4; ++la) {
    const Scalar z = c.zeta[static_cast<size_t>(la)];
    if (z.is_zero()) continue;
    zeta_term += z * (eta(mu, la) * P(nu) - eta(nu, la) * P(mu));
  }

  const NCExpr br = commutator(mmn, mab, rules);
  const NCExpr br2 = commutator(br, mab, rules);

  TensorExpr value = primitive_coproduct(Generator::M_ordered(std::min(mu, nu), std::max(mu, nu)), order);
  if (mu > nu) value = -value;
  value += wedge(mab, mul(s1, zeta_term, rules));
  value += wedge(Scalar::i() * br, sh);
  value += perp(br2, sign_ch * ch);

  // psi_g = eta_{j g} eta_{l i} - eta_{i g} eta_{l j}, chi_g = eta_{j g} eta_{k i} - eta_{i g} eta_{k j}
  const int i = reading.swap_mu_nu ? nu : mu;
  const int j = reading.swap_mu_nu ? mu : nu;
  const int k = reading.swap_alpha_beta ? be : al;
  const int l = reading.swap_alpha_beta ? al : be;
  auto psi = [&](int g) { return Metric::eta(j, g) * Metric::eta(l, i) - Metric::eta(i, g) * Metric::eta(l, j); };
  auto chi = [&](int g) { return Metric::eta(j, g) * Metric::eta(k, i) - Metric::eta(i, g) * Metric::eta(k, j); };
  NCExpr t4(order), t5(order);
  for (int la = 0; la < 4; ++la) {
    const Scalar z = c.zeta[static_cast<size_t>(la)];
    if (z.is_zero()) continue;
    t4 += z * (Scalar(psi(la)) * P(al) - Scalar(chi(la)) * P(be));
    t5 += z * (Scalar(psi(la)) * eta(al, al) * P(be) + Scalar(chi(la)) * eta(be, be) * P(al));
  }
  TensorExpr amb = perp(mul(mab, sh, rules), mul(s1, t4, rules)) +
                   wedge(mul(s1, t5, rules), sign_ch * mul(mab, ch, rules));
  ClosedCoproduct out;
  out.value = value + amb;
  out.ambiguous_part = amb;
  out.ambiguous = !amb.is_zero();
  return out;
}

}  // namespace twistps

namespace twistps {

enum class CoproductVerdict { Match, Mismatch, Ambiguous };

inline const char* verdict_name(CoproductVerdict v) {
  switch (v) {
    case CoproductVerdict::Match: return "match";
    case CoproductVerdict::Mismatch: return "mismatch";
    case CoproductVerdict::Ambiguous: return "ambiguous";
  }
  return "?";
}

struct CoproductComparison {
  Generator generator;
  CoproductVerdict verdict = CoproductVerdict::Match;
  /// psi/chi readings under which the printed formula reproduces the conjugation.
  std::vector<std::string> matching_readings;
  /// conjugation minus printed form (first reading) when nothing matched.
  TensorExpr diff;
};

/// Compares Delta_xi = F Delta_0 F^{-1} with the printed closed forms for all
/// ten generators. For M generators whose printed form involves psi/chi, every
/// index reading is tried; the verdict is `match` when at least one reading
/// agrees and the matching readings are listed.
inline std::vector<CoproductComparison> verify_coproducts(const TwistedPoincare& hopf) {
  const int order = hopf.order();
  const TwistCarrier& c = hopf.carrier();
  std::vector<CoproductComparison> out;
  for (const auto& g : poincare_generators()) {
    CoproductComparison cmp;
    cmp.generator = g;
    const TensorExpr& engine = hopf.coproduct(g);
    if (g.kind == Kind::P) {
      cmp.diff = engine - closed_coproduct_P(g.i, c, order);
      cmp.verdict = cmp.diff.is_zero() ? CoproductVerdict::Match : CoproductVerdict::Mismatch;
      out.push_back(std::move(cmp));
      continue;
    }
    bool any_ambiguous = false;
    for (const auto& reading : PsiChiReading::all()) {
      ClosedCoproduct pc = closed_coproduct_M(g.i, g.j, c, order, reading);
      any_ambiguous = any_ambiguous || pc.ambiguous;
      TensorExpr d = engine - pc.value;
      if (d.is_zero()) cmp.matching_readings.push_back(reading.name());
      if (cmp.diff.is_zero() && !d.is_zero() && cmp.matching_readings.empty()) cmp.diff = d;
    }
    if (!cmp.matching_readings.empty()) {
      cmp.verdict = CoproductVerdict::Match;
      cmp.diff = TensorExpr(order);
    } else {
      cmp.verdict = any_ambiguous ? CoproductVerdict::Ambiguous : CoproductVerdict::Mismatch;
    }
    out.push_back(std::move(cmp));
  }
  return out;
}

}  // namespace twistps
