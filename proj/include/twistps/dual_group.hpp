#pragma once

#include "poincare.hpp"
#include "report.hpp"

#include <vector>

namespace twistps {

/// Relations of the dual quantum group in the basis {Lambda^mu_nu, a^mu}.
/// Indices are lowered with the Minkowski metric: a_beta = eta_{beta nu} a^nu,
/// Lambda_{alpha rho} = eta_{alpha sigma} Lambda^sigma_rho. 1/xi = 2s.
inline RewriteRuleset group_rules(const TwistCarrier& c, int order) {
  RewriteRuleset rules;
  const int al = c.alpha, be = c.beta;
  const Scalar two_i_s_unit = Scalar(0, 2);
  const DeformSeries inv_xi = DeformSeries::monomial(order, 1, two_i_s_unit);  // i/xi
  auto zeta = [&](int m) { return c.zeta[static_cast<size_t>(m)]; };
  auto a_low = [&](int m) { return NCExpr::generator(order, Generator::a(m), Metric::eta(m)); };
  auto lam = [&](int up, int down) { return NCExpr::generator(order, Generator::Lambda(up, down)); };
  auto lam_low = [&](int low, int down) { return Scalar(Metric::eta(low)) * lam(low, down); };
  auto d = [](int a, int b) { return Scalar(Metric::delta(a, b)); };
  auto eta = [](int a, int b) { return Scalar(Metric::eta(a, b)); };
  const RewriteRuleset commuting;

  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) {
      NCExpr v = zeta(nu) * (d(mu, al) * a_low(be) - d(mu, be) * a_low(al)) +
                 zeta(mu) * (d(nu, be) * a_low(al) - d(nu, al) * a_low(be));
      rules.set_commutator(Generator::a(mu), Generator::a(nu), v * inv_xi);
    }

  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      for (int rho = 0; rho < 4; ++rho) {
        NCExpr v(order);
        for (int la = 0; la < 4; ++la) {
          if (zeta(la).is_zero()) continue;
          v += zeta(la) * mul(lam(mu, la), eta(be, rho) * lam(nu, al) - eta(al, rho) * lam(nu, be), commuting);
        }
        v += zeta(mu) * (d(nu, be) * lam_low(al, rho) - d(nu, al) * lam_low(be, rho));
        rules.set_commutator(Generator::a(mu), Generator::Lambda(nu, rho), v * inv_xi);
      }
  return rules;
}

inline std::vector<Generator> group_generators() {
  std::vector<Generator> out;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) out.push_back(Generator::Lambda(mu, nu));
  for (int mu = 0; mu < 4; ++mu) out.push_back(Generator::a(mu));
  return out;
}

/// Delta(Lambda^mu_nu) = Lambda^mu_rho (x) Lambda^rho_nu,
/// Delta(a^mu) = Lambda^mu_nu (x) a^nu + a^mu (x) 1.
inline TensorExpr group_coproduct(const Generator& g, int order) {
  TensorExpr t(order);
  const DeformSeries one(order, 1);
  if (g.kind == Kind::Lambda) {
    for (int rho = 0; rho < 4; ++rho)
      t.add_term({Word{Generator::Lambda(g.i, rho)}, Word{Generator::Lambda(rho, g.j)}}, one);
    return t;
  }
  if (g.kind == Kind::A) {
    for (int nu = 0; nu < 4; ++nu) t.add_term({Word{Generator::Lambda(g.i, nu)}, Word{Generator::a(nu)}}, one);
    t.add_term({Word{g}, Word{}}, one);
    return t;
  }
  throw std::invalid_argument("group_coproduct: not a group generator: " + g.name());
}

inline TensorExpr group_coproduct(const Word& w, const RewriteRuleset& rules, int order) {
  TensorExpr r = TensorExpr::identity(order);
  for (const auto& g : w) r = tensor_mul(r, group_coproduct(g, order), rules);
  return r;
}

inline TensorExpr group_coproduct(const NCExpr& e, const RewriteRuleset& rules) {
  TensorExpr r(e.order());
  for (const auto& [w, c] : e.terms()) r += group_coproduct(w, rules, e.order()) * c;
  return r;
}

/// eps(Lambda^mu_nu) = delta^mu_nu, eps(a^mu) = 0, multiplicative.
inline DeformSeries group_counit(const Word& w, int order) {
  for (const auto& g : w) {
    if (g.kind == Kind::A) return DeformSeries(order);
    if (g.kind == Kind::Lambda && g.i != g.j) return DeformSeries(order);
  }
  return DeformSeries(order, 1);
}

/// Jacobi identities over {a,a,a}, {a,a,Lambda}, {a,Lambda,Lambda}; homomorphism
/// of the coproduct on (a,a) and (a,Lambda) brackets; coassociativity and counit.
inline Report group_consistency(const TwistCarrier& c, int order) {
  Report r{std::string("dual group ") + case_name(c.kind), {}};
  const RewriteRuleset rules = group_rules(c, order);
  auto gen = [&](const Generator& g) { return NCExpr::generator(order, g); };
  auto jacobi = [&](const Generator& x, const Generator& y, const Generator& z) {
    NCExpr s = commutator(commutator(gen(x), gen(y), rules), gen(z), rules) +
               commutator(commutator(gen(y), gen(z), rules), gen(x), rules) +
               commutator(commutator(gen(z), gen(x), rules), gen(y), rules);
    r.add("jacobi(" + x.name() + "," + y.name() + "," + z.name() + ")", s.is_zero(), s.is_zero() ? "" : s.str());
  };
  const auto gens = group_generators();
  std::vector<Generator> as, lams;
  for (const auto& g : gens) (g.kind == Kind::A ? as : lams).push_back(g);
  for (size_t i = 0; i < as.size(); ++i)
    for (size_t j = i + 1; j < as.size(); ++j) {
      for (size_t k = j + 1; k < as.size(); ++k) jacobi(as[i], as[j], as[k]);
      for (const auto& l : lams) jacobi(as[i], as[j], l);
    }
  for (const auto& a : as)
    for (size_t i = 0; i < lams.size(); ++i)
      for (size_t j = i + 1; j < lams.size(); ++j) jacobi(a, lams[i], lams[j]);

  auto hom = [&](const Generator& x, const Generator& y) {
    const TensorExpr lhs = group_coproduct(rules.bracket(x, y, order), rules);
    const TensorExpr dx = group_coproduct(x, order), dy = group_coproduct(y, order);
    const TensorExpr rhs = tensor_mul(dx, dy, rules) - tensor_mul(dy, dx, rules);
    r.add("hom[" + x.name() + "," + y.name() + "]", lhs == rhs);
  };
  for (size_t i = 0; i < as.size(); ++i) {
    for (size_t j = i + 1; j < as.size(); ++j) hom(as[i], as[j]);
    for (const auto& l : lams) hom(as[i], l);
  }

  auto delta = [&](const Word& w) { return group_coproduct(w, rules, order); };
  auto eps = [order](std::size_t, const Word& w) { return group_counit(w, order); };
  for (const auto& g : gens) {
    const TensorExpr d = group_coproduct(g, order);
    r.add("coassoc " + g.name(), apply_on_leg<2>(d, 0, delta) == apply_on_leg<2>(d, 1, delta));
    r.add("counit " + g.name(), d.contract_except(1, eps) == gen(g) && d.contract_except(0, eps) == gen(g));
  }
  return r;
}

}  // namespace twistps
