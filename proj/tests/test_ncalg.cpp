#include <doctest.h>

#include <twistps/closed_form.hpp>
#include <twistps/heisenberg.hpp>
#include <twistps/poincare.hpp>

using namespace twistps;

namespace {

NCExpr g(int n, const Generator& x, const Scalar& c = 1) { return NCExpr::generator(n, x, c); }

}  // namespace

TEST_CASE("scalar arithmetic is exact") {
  const Scalar a(make_rational(1, 3), make_rational(-2, 5));
  const Scalar b(make_rational(3, 7), 1);
  CHECK((a * b) / b == a);
  CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
  CHECK(i_pow(3) == -Scalar::i());
  CHECK(i_pow(-1) == -Scalar::i());
  CHECK(parse_rational("6/4") == make_rational(3, 2));
  CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("series product truncates at the order") {
  const DeformSeries x = DeformSeries::monomial(3, 1, 1);
  DeformSeries e(3, 1);
  e += x;
  const DeformSeries sq = e * e;
  CHECK(sq[0] == Scalar(1));
  CHECK(sq[1] == Scalar(2));
  CHECK(sq[2] == Scalar(1));
  CHECK(sq[3].is_zero());
  CHECK((x * x * x * x).is_zero());
  CHECK(e.reflected()[1] == Scalar(-1));
}

TEST_CASE("generator names parse back") {
  for (const auto& x : poincare_generators()) CHECK(Generator::parse(x.name()) == x);
  CHECK(Generator::parse("pi0") == Generator::pi(0));
  CHECK(Generator::parse("L1_2") == Generator::Lambda(1, 2));
  CHECK(Generator::parse("t") == Generator::t());
  CHECK_FALSE(Generator::parse("q7"));
  CHECK(Generator::x(1).display() == "x_1");
  CHECK(Generator::pi(0).latex() == "\\pi_0");
}

TEST_CASE("normal ordering with the classical rules") {
  const int n = 2;
  const RewriteRuleset rules = classical_rules(n);
  const NCExpr p1 = g(n, Generator::P(1)), p2 = g(n, Generator::P(2));
  const NCExpr m12 = M(n, 1, 2);

  const NCExpr lhs = mul(p1, m12, rules);
  const NCExpr expect = concat(m12, p1) + Scalar::i() * p2;
  CHECK(lhs == expect);

  const NCExpr canonical = concat(m12, p1);
  CHECK(normal_order(canonical, rules) == canonical);
  CHECK(canonical.is_normal_ordered());
}

TEST_CASE("classical brackets") {
  const int n = 0;
  const RewriteRuleset rules = classical_rules(n);
  auto P = [&](int m) { return g(n, Generator::P(m)); };
  CHECK(commutator(P(1), P(2), rules).is_zero());
  CHECK(commutator(P(0), P(3), rules).is_zero());
  CHECK(commutator(M(n, 1, 2), P(1), rules) == -Scalar::i() * P(2));
  CHECK(commutator(M(n, 1, 0), P(0), rules) == -Scalar::i() * P(1));
  CHECK(commutator(M(n, 1, 2), M(n, 1, 3), rules) == -Scalar::i() * M(n, 2, 3));
  const NCExpr e = M(n, 0, 3) + Scalar(2) * P(1);
  CHECK(commutator(e, e, rules).is_zero());
}

TEST_CASE("phase-space rules reorder p1 x1") {
  const int n = 6;
  const PhaseSpaceTable t = build_phase_space(TwistCarrier::rotation_gamma(), n);
  const RewriteRuleset rules = t.ruleset();
  const NCExpr x1 = g(n, Generator::x(1)), p1 = g(n, Generator::p(1));
  const NCExpr cos_series = expand(ClosedForm::trig(Shape::Cos, 1, Generator::p(3)), n);
  CHECK(mul(p1, x1, rules) == concat(x1, p1) - Scalar::i() * cos_series);
}

TEST_CASE("rewrite budget is enforced") {
  RewriteRuleset rules(3);
  rules.set_commutator(Generator::P(1), Generator::P(2), NCExpr::constant(0, 1));
  Word bad;
  for (int k = 0; k < 6; ++k) {
    bad.push_back(Generator::P(2));
    bad.push_back(Generator::P(1));
  }
  CHECK_THROWS_AS(normal_order(NCExpr::word(0, bad, DeformSeries(0, 1)), rules), RewriteError);
}

TEST_CASE("tensor product with the unit and of a squared wedge") {
  const int n = 0;
  const RewriteRuleset rules = classical_rules(n);
  const NCExpr p1 = g(n, Generator::P(1)), m12 = M(n, 1, 2);
  const TensorExpr w = wedge(p1, m12);
  CHECK(tensor_mul(TensorExpr::identity(n), w, rules) == w);

  // (a(x)b - b(x)a)^2 expanded leg by leg
  auto leg = [&](const NCExpr& a, const NCExpr& b) { return mul(a, b, rules); };
  const TensorExpr brute = tensor(leg(p1, p1), leg(m12, m12)) - tensor(leg(p1, m12), leg(m12, p1)) -
                           tensor(leg(m12, p1), leg(p1, m12)) + tensor(leg(m12, m12), leg(p1, p1));
  const TensorExpr sq = tensor_mul(w, w, rules);
  CHECK(sq == brute);
  for (const auto& [legs, c] : sq.terms()) {
    CHECK(is_canonical(legs[0]));
    CHECK(is_canonical(legs[1]));
  }
}

TEST_CASE("closed-form recognition") {
  const int n = 4;
  NCExpr e(n);
  const Generator p3 = Generator::p(3);
  e.add_term({}, DeformSeries::monomial(n, 0, Scalar::i()));
  e.add_term(power_word(p3, 2), DeformSeries::monomial(n, 2, Scalar(0, make_rational(-1, 2))));
  e.add_term(power_word(p3, 4), DeformSeries::monomial(n, 4, Scalar(0, make_rational(1, 24))));
  const auto cf = recognize_closed_form(e);
  REQUIRE(cf);
  CHECK(*cf == ClosedForm::trig(Shape::Cos, Scalar::i(), p3));
  CHECK(to_text(*cf) == "i*cos(s*p_3)");

  const auto c = recognize_closed_form(NCExpr::constant(n, -Scalar::i()));
  REQUIRE(c);
  CHECK(*c == ClosedForm::constant(-Scalar::i()));

  NCExpr odd(n);
  odd.add_term({Generator::p(0)}, DeformSeries::monomial(n, 1, Scalar::i()));
  odd.add_term(power_word(Generator::p(0), 2), DeformSeries::monomial(n, 3, Scalar(5)));
  CHECK_FALSE(recognize_closed_form(odd));
}

TEST_CASE("substitution carries the power of c") {
  SubstitutionMap m;
  m[Generator::x(0)] = {Scalar(1), 1, Generator::t()};
  m[Generator::p(0)] = {Scalar(1), -1, Generator::pi(0)};

  const CGraded a = substitute(g(0, Generator::x(0)), m);
  REQUIRE(a.size() == 1);
  CHECK(a.begin()->first == 1);
  CHECK(a.begin()->second == g(0, Generator::t()));

  const CGraded b = substitute(g(0, Generator::p(0), Scalar::i()), m);
  REQUIRE(b.size() == 1);
  CHECK(b.begin()->first == -1);
  CHECK(b.begin()->second == g(0, Generator::pi(0), Scalar::i()));

  const NCExpr e = g(2, Generator::x(2)) + g(2, Generator::p(1), Scalar(3));
  CHECK(substitute_plain(e, {}) == e);

  NCExpr with_s(2);
  with_s.add_term({Generator::x(1)}, DeformSeries::monomial(2, 1, 1));
  const CGraded c = substitute(with_s, {}, -1);
  REQUIRE(c.size() == 1);
  CHECK(c.begin()->first == -1);
}

TEST_CASE("partial derivative of a word") {
  const int n = 0;
  const Generator p1 = Generator::p(1);
  const NCExpr e = NCExpr::word(n, power_word(p1, 3), DeformSeries(n, 1));
  CHECK(partial_derivative(e, p1) == NCExpr::word(n, power_word(p1, 2), DeformSeries(n, 3)));
  CHECK(partial_derivative(e, Generator::p(2)).is_zero());
}
