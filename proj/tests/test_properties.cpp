#include <doctest.h>

#include <twistps/closed_form.hpp>
#include <twistps/contraction.hpp>
#include <twistps/heisenberg.hpp>

#include <random>

using namespace twistps;

namespace {

NCExpr random_expr(std::mt19937_64& rng, const std::vector<Generator>& alphabet, int order) {
  std::uniform_int_distribution<int> len(0, 3), terms(1, 3), coeff(-3, 3), power(0, order);
  std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
  NCExpr e(order);
  const int nt = terms(rng);
  for (int k = 0; k < nt; ++k) {
    Word w;
    const int n = len(rng);
    for (int j = 0; j < n; ++j) w.push_back(alphabet[pick(rng)]);
    e.add_term(w, DeformSeries::monomial(order, power(rng), Scalar(coeff(rng), coeff(rng))));
  }
  return e;
}

}  // namespace

TEST_CASE("associativity on random triples") {
  std::mt19937_64 rng(11);
  const int n = 3;
  const RewriteRuleset classical = classical_rules(n);
  const PhaseSpaceTable table = build_phase_space(TwistCarrier::boost(), n);
  const RewriteRuleset phase = table.ruleset();
  const auto pg = poincare_generators();
  const auto tg = table.generators();
  for (int k = 0; k < 100; ++k) {
    const NCExpr a = random_expr(rng, pg, n), b = random_expr(rng, pg, n), c = random_expr(rng, pg, n);
    CHECK(mul(mul(a, b, classical), c, classical) == mul(a, mul(b, c, classical), classical));
  }
  for (int k = 0; k < 100; ++k) {
    const NCExpr a = random_expr(rng, tg, n), b = random_expr(rng, tg, n), c = random_expr(rng, tg, n);
    CHECK(mul(mul(a, b, phase), c, phase) == mul(a, mul(b, c, phase), phase));
  }
}

TEST_CASE("normal ordering is idempotent") {
  std::mt19937_64 rng(12);
  const int n = 4;
  const PhaseSpaceTable table = build_phase_space(TwistCarrier::rotation_gamma(), n);
  const RewriteRuleset rules = table.ruleset();
  for (int k = 0; k < 50; ++k) {
    const NCExpr once = normal_order(random_expr(rng, table.generators(), n), rules);
    CHECK(once.is_normal_ordered());
    CHECK(normal_order(once, rules) == once);
  }
}

TEST_CASE("truncation is coherent across orders") {
  for (const auto& c : {TwistCarrier::rotation_gamma(), TwistCarrier::rotation_zero(), TwistCarrier::boost()}) {
    const PhaseSpaceTable hi = build_phase_space(c, 7);
    const PhaseSpaceTable lo = build_phase_space(c, 4);
    const PhaseSpaceTable cut = hi.truncated(4);
    for (const auto& a : hi.generators())
      for (const auto& b : hi.generators()) CHECK(cut.bracket(a, b) == lo.bracket(a, b));
    const PhaseSpaceTable gal_hi = contract(hi).table.truncated(4), gal_lo = contract(lo).table;
    for (const auto& a : gal_lo.generators())
      for (const auto& b : gal_lo.generators()) CHECK(gal_hi.bracket(a, b) == gal_lo.bracket(a, b));
  }
}

TEST_CASE("closed forms survive expansion and recognition") {
  const int n = 7;
  const std::vector<ClosedForm> forms = {
      ClosedForm::constant(Scalar(0, -1)),
      ClosedForm::constant(Scalar(3, 2)),
      ClosedForm::linear(Scalar(0, 2), 1, Generator::x(1)),
      ClosedForm::linear(Scalar(0, -1), 1, Generator::p(2)),
      ClosedForm::linear(Scalar(0, 1), 1, Generator::pi(0)),
      ClosedForm::trig(Shape::Cos, Scalar::i(), Generator::p(3)),
      ClosedForm::trig(Shape::Sin, -Scalar::i(), Generator::p(0)),
      ClosedForm::trig(Shape::Cosh, -Scalar::i(), Generator::p(2)),
      ClosedForm::trig(Shape::Sinh, Scalar::i(), Generator::pi(1)),
      ClosedForm::trig(Shape::Sin, Scalar(2), Generator::p(1), 2),
  };
  for (const auto& f : forms) {
    CAPTURE(to_text(f));
    const auto back = recognize_closed_form(expand(f, n));
    REQUIRE(back);
    CHECK(*back == f);
  }
}

TEST_CASE("[x,p] entries have a definite parity in s") {
  for (const auto& c : {TwistCarrier::rotation_gamma(), TwistCarrier::rotation_zero(), TwistCarrier::boost()}) {
    const PhaseSpaceTable t = build_phase_space(c, 8);
    for (const auto& x : t.positions)
      for (const auto& p : t.momenta) {
        const TableEntry* e = t.entry(x, p);
        if (!e || e->value.is_zero()) continue;
        REQUIRE(e->closed);
        const bool even = e->closed->shape == Shape::Cos || e->closed->shape == Shape::Cosh ||
                          (e->closed->shape == Shape::Constant && e->closed->s_power % 2 == 0);
        for (const auto& [w, coeff] : e->value.terms())
          for (int k = 0; k <= 8; ++k)
            if (!coeff[k].is_zero()) CHECK((k % 2 == 0) == even);
      }
  }
}

TEST_CASE("tables are antisymmetric and close under Jacobi") {
  for (const auto& c : {TwistCarrier::rotation_gamma(), TwistCarrier::rotation_zero(), TwistCarrier::boost()}) {
    const PhaseSpaceTable t = build_phase_space(c, 5);
    for (const auto& a : t.generators()) {
      CHECK(t.bracket(a, a).is_zero());
      for (const auto& b : t.generators()) CHECK(t.bracket(a, b) == -t.bracket(b, a));
    }
    CHECK(jacobi_check(t).all_pass());
    CHECK(jacobi_check(contract(t).table).all_pass());
  }
}

TEST_CASE("other index assignments stay consistent") {
  for (const auto& c : {TwistCarrier::rotation_gamma(3, 1, 2), TwistCarrier::rotation_zero(1, 3),
                        TwistCarrier::boost(2, 3)}) {
    CAPTURE(c.describe());
    const PhaseSpaceTable t = build_phase_space(c, 4);
    CHECK(jacobi_check(t).all_pass());
    CHECK(contraction_properties(t).all_pass());
  }
}
