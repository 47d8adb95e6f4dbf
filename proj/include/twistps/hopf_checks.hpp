#pragma once

#include "poincare.hpp"
#include "report.hpp"

namespace twistps {

/// (Delta (x) id) Delta = (id (x) Delta) Delta on every generator.
inline Report check_coassociativity(const TwistedPoincare& h) {
  Report r{"coassociativity", {}};
  auto delta = [&](const Word& w) { return h.coproduct(w); };
  for (const auto& g : poincare_generators()) {
    const TensorExpr& d = h.coproduct(g);
    Tensor<3> left = apply_on_leg<2>(d, 0, delta);
    Tensor<3> right = apply_on_leg<2>(d, 1, delta);
    Tensor<3> diff = left - right;
    r.add(g.name(), diff.is_zero(), diff.is_zero() ? "" : std::to_string(diff.size()) + " residual terms");
  }
  return r;
}

/// (eps (x) id) Delta = id = (id (x) eps) Delta.
inline Report check_counit(const TwistedPoincare& h) {
  Report r{"counit", {}};
  const int order = h.order();
  auto eps = [order](std::size_t, const Word& w) { return algebra_counit(w, order); };
  for (const auto& g : poincare_generators()) {
    const NCExpr expect = NCExpr::generator(order, g);
    const TensorExpr& d = h.coproduct(g);
    const bool ok = d.contract_except(1, eps) == expect && d.contract_except(0, eps) == expect;
    r.add(g.name(), ok);
  }
  return r;
}

/// Delta([A, B]) = [Delta A, Delta B] for all generator pairs.
inline Report check_homomorphism(const TwistedPoincare& h) {
  Report r{"homomorphism", {}};
  const int order = h.order();
  const auto gens = poincare_generators();
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      const NCExpr br = h.rules().bracket(gens[a], gens[b], order);
      const TensorExpr lhs = h.coproduct(br);
      const TensorExpr& da = h.coproduct(gens[a]);
      const TensorExpr& db = h.coproduct(gens[b]);
      const TensorExpr rhs = tensor_mul(da, db, h.rules()) - tensor_mul(db, da, h.rules());
      r.add("[" + gens[a].name() + "," + gens[b].name() + "]", lhs == rhs);
    }
  return r;
}

/// Primitive coproduct extended multiplicatively to a word.
inline TensorExpr primitive_coproduct(const Word& w, const RewriteRuleset& rules, int order) {
  TensorExpr r = TensorExpr::identity(order);
  for (const auto& g : w) r = tensor_mul(r, primitive_coproduct(g, order), rules);
  return r;
}

/// (F (x) 1)(Delta_0 (x) id)F = (1 (x) F)(id (x) Delta_0)F.
inline Report check_cocycle(const TwistedPoincare& h) {
  Report r{"two-cocycle", {}};
  const int order = h.order();
  auto d0 = [&](const Word& w) { return primitive_coproduct(w, h.rules(), order); };
  const TensorExpr& f = h.twist();
  Tensor<3> left = tensor_mul(insert_unit<2>(f, 2), apply_on_leg<2>(f, 0, d0), h.rules());
  Tensor<3> right = tensor_mul(insert_unit<2>(f, 0), apply_on_leg<2>(f, 1, d0), h.rules());
  r.add("F", left == right);
  return r;
}

/// F F^{-1} = F^{-1} F = 1 (x) 1.
inline Report check_twist_inverse(const TwistedPoincare& h) {
  Report r{"twist-inverse", {}};
  const TensorExpr one = TensorExpr::identity(h.order());
  r.add("F*Finv", tensor_mul(h.twist(), h.twist_inverse(), h.rules()) == one);
  r.add("Finv*F", tensor_mul(h.twist_inverse(), h.twist(), h.rules()) == one);
  return r;
}

/// [zeta.P, M_{alpha beta}] = 0 under the classical brackets.
inline bool carrier_is_abelian(const TwistCarrier& c, int order = 0) {
  const RewriteRuleset rules = classical_rules(order);
  return commutator(carrier_momentum(c, order), carrier_rotation(c, order), rules).is_zero();
}

inline Report hopf_property_suite(const TwistedPoincare& h) {
  Report r{std::string("hopf ") + case_name(h.carrier().kind), {}};
  r.add("carrier abelian", carrier_is_abelian(h.carrier(), h.order()));
  r.append(check_twist_inverse(h));
  r.append(check_counit(h));
  r.append(check_coassociativity(h));
  r.append(check_homomorphism(h));
  r.append(check_cocycle(h));
  return r;
}

}  // namespace twistps
