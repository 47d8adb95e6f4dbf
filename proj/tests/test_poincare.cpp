#include <doctest.h>

#include <twistps/coproduct_oracle.hpp>
#include <twistps/hopf_checks.hpp>

using namespace twistps;

namespace {

NCExpr P(int n, int mu) { return NCExpr::generator(n, Generator::P(mu)); }

}  // namespace

TEST_CASE("carrier validation") {
  CHECK_NOTHROW(TwistCarrier::rotation_gamma().validate());
  CHECK_NOTHROW(TwistCarrier::rotation_zero(2, 3).validate());
  CHECK_NOTHROW(TwistCarrier::boost(3, 1).validate());
  CHECK_THROWS_AS(TwistCarrier::rotation_gamma(1, 1, 3).validate(), std::invalid_argument);
  CHECK_THROWS_AS(TwistCarrier::rotation_gamma(1, 2, 2).validate(), std::invalid_argument);
  CHECK_THROWS_AS(TwistCarrier::boost(0, 2).validate(), std::invalid_argument);
  CHECK_THROWS_AS(TwistCarrier::rotation_zero(1, 4).validate(), std::invalid_argument);
  CHECK(parse_case("boost") == CarrierCase::Boost);
  CHECK_FALSE(parse_case("kappa"));
  for (const auto& c : {TwistCarrier::rotation_gamma(), TwistCarrier::rotation_zero(), TwistCarrier::boost()})
    CHECK(carrier_is_abelian(c));
}

TEST_CASE("twist factor at low order") {
  const TwistCarrier c = TwistCarrier::rotation_gamma();
  CHECK(twist_factor(c, 0) == TensorExpr::identity(0));

  const TensorExpr f1 = twist_factor(c, 1);
  const TensorExpr expect =
      TensorExpr::identity(1) +
      (tensor(P(1, 3), M(1, 1, 2)) - tensor(M(1, 1, 2), P(1, 3))) * DeformSeries::monomial(1, 1, Scalar::i());
  CHECK(f1 == expect);
}

TEST_CASE("twist times inverse is the unit") {
  for (const auto& c : {TwistCarrier::rotation_gamma(), TwistCarrier::rotation_zero(), TwistCarrier::boost()}) {
    const int n = 8;
    const RewriteRuleset rules = classical_rules(n);
    CHECK(tensor_mul(twist_factor(c, n), twist_factor_inverse(c, n), rules) == TensorExpr::identity(n));
  }
}

TEST_CASE("carrier momentum keeps the primitive coproduct") {
  const int n = 6;
  const TwistedPoincare h(TwistCarrier::rotation_gamma(), n);
  CHECK(h.coproduct(Generator::P(3)) == primitive_coproduct(Generator::P(3), n));
  CHECK(h.coproduct(Generator::P(0)) == primitive_coproduct(Generator::P(0), n));
  const TwistedPoincare b(TwistCarrier::boost(), n);
  CHECK(b.coproduct(Generator::P(2)) == primitive_coproduct(Generator::P(2), n));
  CHECK(b.coproduct(Generator::P(3)) == primitive_coproduct(Generator::P(3), n));
}

TEST_CASE("undeformed order gives primitive coproducts") {
  const TwistedPoincare h(TwistCarrier::boost(), 0);
  for (const auto& g : poincare_generators()) CHECK(h.coproduct(g) == primitive_coproduct(g, 0));
}

TEST_CASE("first-order coproduct of P1") {
  const int n = 1;
  const TensorExpr d = twisted_coproduct(Generator::P(1), TwistCarrier::rotation_gamma(), n);
  const TensorExpr expect = primitive_coproduct(Generator::P(1), n) +
                            (tensor(P(n, 3), P(n, 2)) - tensor(P(n, 2), P(n, 3))) * DeformSeries::monomial(n, 1, 1);
  CHECK(d == expect);
  CHECK(d == closed_coproduct_P(1, TwistCarrier::rotation_gamma(), n));
}

TEST_CASE("closed-form coproducts agree with conjugation") {
  for (const auto& c : {TwistCarrier::rotation_gamma(), TwistCarrier::rotation_zero(), TwistCarrier::boost()}) {
    CAPTURE(case_name(c.kind));
    const TwistedPoincare h(c, 4);
    for (const auto& cmp : verify_coproducts(h)) {
      CAPTURE(cmp.generator.name());
      CHECK(cmp.verdict != CoproductVerdict::Mismatch);
      if (cmp.generator.kind == Kind::P) CHECK(cmp.verdict == CoproductVerdict::Match);
    }
    for (const auto& cmp : verify_coproducts(TwistedPoincare(c, 0))) CHECK(cmp.verdict == CoproductVerdict::Match);
  }
}

TEST_CASE("closed-form coproducts on other index assignments") {
  for (const auto& c : {TwistCarrier::rotation_gamma(2, 3, 1), TwistCarrier::rotation_zero(3, 1),
                        TwistCarrier::boost(3, 1)}) {
    CAPTURE(c.describe());
    for (const auto& cmp : verify_coproducts(TwistedPoincare(c, 3))) {
      CAPTURE(cmp.generator.name());
      CHECK(cmp.verdict != CoproductVerdict::Mismatch);
    }
  }
}

TEST_CASE("hopf property suite at moderate order") {
  for (const auto& c : {TwistCarrier::rotation_gamma(), TwistCarrier::rotation_zero(), TwistCarrier::boost()}) {
    const Report r = hopf_property_suite(TwistedPoincare(c, 4));
    CAPTURE(r.title);
    CHECK(r.all_pass());
  }
}
