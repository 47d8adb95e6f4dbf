#include <doctest.h>

#include <twistps/reference_tables.hpp>

#include <algorithm>

using namespace twistps;

namespace {

const LedgerEntry* find(const DiscrepancyLedger& l, const std::string& table, const std::string& relation) {
  for (const auto& e : l.entries)
    if (e.table == table && e.relation == relation) return &e;
  return nullptr;
}

}  // namespace

TEST_CASE("role values parse") {
  const Roles r = Roles::of(TwistCarrier::rotation_gamma());
  CHECK(detail::role_value("0", r) == ClosedForm::constant(Scalar()));
  CHECK(detail::role_value("-i", r) == ClosedForm::constant(-Scalar::i()));
  CHECK(detail::role_value("2i*s*x_l", r) == ClosedForm::linear(Scalar(0, 2), 1, Generator::x(2)));
  CHECK(detail::role_value("i*cos(p_g)", r) == ClosedForm::trig(Shape::Cos, Scalar::i(), Generator::p(3)));
}

TEST_CASE("every published table has all rows") {
  for (const auto& c : {TwistCarrier::rotation_gamma(), TwistCarrier::rotation_zero(), TwistCarrier::boost()})
    for (const Regime g : {Regime::Relativistic, Regime::Galilean}) {
      const auto rows = reference_relations(c, g);
      CHECK(rows.size() == 28);
      std::vector<std::pair<Generator, Generator>> pairs;
      for (const auto& row : rows) pairs.emplace_back(std::min(row.a, row.b), std::max(row.a, row.b));
      std::sort(pairs.begin(), pairs.end());
      CHECK(std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end());
    }
}

TEST_CASE("rotation table against the published rows") {
  const PhaseSpaceTable t = build_phase_space(TwistCarrier::rotation_gamma(), 6);
  const DiscrepancyLedger l = compare_with_reference(t);
  CHECK(l.entries.size() == 28);
  CHECK(l.unexplained().empty());
  CHECK(l.count(Verdict::SignFlip) == 4);

  const LedgerEntry* x0p0 = find(l, "relativistic rotation-gamma", "[x_0, p_0]");
  REQUIRE(x0p0);
  CHECK(x0p0->verdict == Verdict::Match);
  const LedgerEntry* x2p2 = find(l, "relativistic rotation-gamma", "[x_2, p_2]");
  REQUIRE(x2p2);
  CHECK(x2p2->verdict == Verdict::Match);

  // the published relativistic and Galilean rows disagree on this sign; the engine decides
  const LedgerEntry* x1p2 = find(l, "relativistic rotation-gamma", "[x_1, p_2]");
  REQUIRE(x1p2);
  const DiscrepancyLedger g = verify_contraction(t);
  const LedgerEntry* y1pi2 = find(g, "galilean rotation-gamma", "[y_1, pi_2]");
  REQUIRE(y1pi2);
  CHECK((x1p2->verdict == Verdict::Match) != (y1pi2->verdict == Verdict::Match));
  CHECK(x1p2->verdict == Verdict::SignFlip);
  CHECK(x1p2->documented);
}

TEST_CASE("sign flips carry Jacobi evidence") {
  for (const auto& c : {TwistCarrier::rotation_gamma(), TwistCarrier::rotation_zero(), TwistCarrier::boost()}) {
    const DiscrepancyLedger l = compare_with_reference(build_phase_space(c, 5));
    CHECK(l.acceptable());
    for (const auto& e : l.entries)
      if (e.verdict == Verdict::SignFlip) CHECK(e.evidence.find("Jacobi") != std::string::npos);
  }
}

TEST_CASE("Galilean rows of the rotation carriers") {
  for (const auto& c : {TwistCarrier::rotation_gamma(), TwistCarrier::rotation_zero()}) {
    const DiscrepancyLedger l = verify_contraction(build_phase_space(c, 6));
    CHECK(l.entries.size() == 28);
    CHECK(l.acceptable());
  }
  const DiscrepancyLedger l = verify_contraction(build_phase_space(TwistCarrier::rotation_gamma(), 6));
  const LedgerEntry* e = find(l, "galilean rotation-gamma", "[y_1, y_3]");
  REQUIRE(e);
  CHECK(e->verdict == Verdict::Match);
}

TEST_CASE("Galilean boost rows") {
  const DiscrepancyLedger l = verify_contraction(build_phase_space(TwistCarrier::boost(), 6));
  const LedgerEntry* e = find(l, "galilean boost", "[y_2, pi_2]");
  REQUIRE(e);
  CHECK(e->verdict == Verdict::Match);
  // [y_k, pi_0] and [y_l, pi_0]: the contracted engine table keeps s_bar pi terms
  // that the published Galilean rows set to zero
  CHECK(l.count(Verdict::Mismatch) == 2);
  for (const auto* u : l.unexplained()) {
    CHECK(u->relation.find("pi_0") != std::string::npos);
    CHECK(u->evidence.find("contract to") != std::string::npos);
  }
}

TEST_CASE("undeformed order matches every row") {
  for (const auto& c : {TwistCarrier::rotation_gamma(), TwistCarrier::rotation_zero(), TwistCarrier::boost()}) {
    const PhaseSpaceTable t = build_phase_space(c, 0);
    CHECK(compare_with_reference(t).count(Verdict::Match) == 28);
    CHECK(verify_contraction(t).count(Verdict::Match) == 28);
  }
}
