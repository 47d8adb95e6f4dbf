#include <doctest.h>

#include <twistps/contraction.hpp>

using namespace twistps;

namespace {

NCExpr gen(int n, const Generator& g, const Scalar& c = 1) { return NCExpr::generator(n, g, c); }

int axis(const Generator& g) { return g.kind == Kind::T ? 0 : g.i; }

NCExpr s_times(int n, const Scalar& c, const Generator& g) { return gen(n, g) * DeformSeries::monomial(n, 1, c); }

}  // namespace

TEST_CASE("contraction schemes") {
  CHECK(ContractionScheme::for_case(CarrierCase::RotationGamma).c_per_s() == 0);
  CHECK(ContractionScheme::for_case(CarrierCase::RotationZero).c_per_s() == 1);
  CHECK(ContractionScheme::for_case(CarrierCase::Boost).c_per_s() == -1);
  CHECK(ContractionScheme::for_case(CarrierCase::Boost).parameter() == "xi_bar");
  const auto v = ContractionScheme::for_case(CarrierCase::RotationZero).variables();
  CHECK(v.at(Generator::x(0)).c_power == 1);
  CHECK(v.at(Generator::p(0)).c_power == -1);
  CHECK(v.at(Generator::x(2)).target == Generator::y(2));
}

TEST_CASE("time and energy stay canonical in every case") {
  for (const auto& c : {TwistCarrier::rotation_gamma(), TwistCarrier::rotation_zero(), TwistCarrier::boost()}) {
    const LimitResult r = contract(build_phase_space(c, 6));
    CHECK(r.finite());
    CHECK(r.table.regime == Regime::Galilean);
    CHECK(r.table.bracket(Generator::t(), Generator::pi(0)) == NCExpr::constant(6, -Scalar::i()));
  }
}

TEST_CASE("boost case: spatial positions close on time") {
  const int n = 6;
  const PhaseSpaceTable rel = build_phase_space(TwistCarrier::boost(), n);
  const LimitResult r = contract(rel);
  CHECK(r.table.parameter == "xi_bar");
  // [y_2, y_1] = -(i/xi_bar) t
  CHECK(r.table.bracket(Generator::y(2), Generator::y(1)) == s_times(n, Scalar(0, -2), Generator::t()));
  CHECK(r.table.bracket(Generator::y(2), Generator::pi(2)) == NCExpr::constant(n, Scalar::i()));
  CHECK(r.table.bracket(Generator::y(1), Generator::pi(1)) == NCExpr::constant(n, Scalar::i()));
  CHECK(r.suppressed.count({Generator::t(), Generator::pi(0)}) == 1);
  CHECK(r.table.bracket(Generator::t(), Generator::y(1)).is_zero());
  CHECK(r.table.bracket(Generator::t(), Generator::y(2)).is_zero());
}

TEST_CASE("boost case: the c grading of [x0,x2]") {
  const int n = 4;
  const PhaseSpaceTable rel = build_phase_space(TwistCarrier::boost(), n);
  const GradedTable g = rescale(rel, ContractionScheme::for_case(CarrierCase::Boost));
  const CGraded& parts = g.relations.at({Generator::t(), Generator::y(2)});
  REQUIRE_FALSE(parts.empty());
  CHECK(parts.rbegin()->first < 0);
}

TEST_CASE("rotation-zero case: [x0,p1] scales into [t,pi1]") {
  const int n = 5;
  const PhaseSpaceTable rel = build_phase_space(TwistCarrier::rotation_zero(), n);
  const NCExpr before = rel.bracket(Generator::x(0), Generator::p(1));
  REQUIRE_FALSE(before.is_zero());
  const LimitResult r = contract(rel);
  CHECK(r.table.parameter == "xi_hat");
  // s = c s_hat and x0 = c t: the two powers of c cancel at first order
  SubstitutionMap rename;
  rename[Generator::p(2)] = {Scalar(1), 0, Generator::pi(2)};
  CHECK(r.table.bracket(Generator::t(), Generator::pi(1)) == substitute_plain(before, rename));
}

TEST_CASE("rotation case contracts term by term") {
  const int n = 6;
  const LimitResult r = contract(build_phase_space(TwistCarrier::rotation_gamma(), n));
  CHECK(r.table.parameter == "xi");
  CHECK(r.table.bracket(Generator::y(1), Generator::y(3)) == s_times(n, Scalar(0, 2), Generator::y(2)));
  CHECK(r.table.bracket(Generator::y(1), Generator::pi(1)) ==
        expand(ClosedForm::trig(Shape::Cos, Scalar::i(), Generator::pi(3)), n));
  CHECK(r.suppressed.empty());
}

TEST_CASE("classical tables contract to the canonical Galilean table") {
  for (const auto& c : {TwistCarrier::rotation_gamma(), TwistCarrier::rotation_zero(), TwistCarrier::boost()}) {
    const LimitResult r = contract(build_phase_space(c, 0));
    CHECK(r.finite());
    for (const auto& a : r.table.generators())
      for (const auto& b : r.table.generators()) {
        if (!(a < b)) continue;
        const NCExpr v = r.table.bracket(a, b);
        const bool diagonal = !a.is_momentum() && b.is_momentum() && axis(a) == axis(b);
        if (!diagonal) CHECK(v.is_zero());
      }
  }
}

TEST_CASE("rescale rejects mismatched input") {
  const PhaseSpaceTable rel = build_phase_space(TwistCarrier::rotation_gamma(), 2);
  CHECK_THROWS(rescale(rel, ContractionScheme::for_case(CarrierCase::Boost)));
  const PhaseSpaceTable gal = contract(rel).table;
  CHECK_THROWS(rescale(gal, ContractionScheme::for_case(CarrierCase::RotationGamma)));
}

TEST_CASE("contraction property report") {
  for (const auto& c : {TwistCarrier::rotation_gamma(), TwistCarrier::rotation_zero(), TwistCarrier::boost()}) {
    const Report r = contraction_properties(build_phase_space(c, 5));
    CAPTURE(r.title);
    CHECK(r.all_pass());
  }
}
