#pragma once

#include "contraction.hpp"
#include "coproduct_oracle.hpp"
#include "dual_group.hpp"
#include "heisenberg.hpp"
#include "hopf_checks.hpp"
#include "reference_tables.hpp"
#include "uncertainty.hpp"

#include <string>
#include <vector>

namespace twistps {

struct VerifyOptions {
  int order = 6;
  bool jacobi_only = false;
  NumericConfig numeric;
};

struct VerifyResult {
  std::vector<Report> reports;
  DiscrepancyLedger ledger;

  bool pass() const {
    for (const auto& r : reports)
      if (!r.all_pass()) return false;
    return ledger.acceptable();
  }
};

inline Report coproduct_report(const TwistedPoincare& hopf) {
  Report r{std::string("coproducts ") + case_name(hopf.carrier().kind), {}};
  for (const auto& c : verify_coproducts(hopf)) {
    std::string detail = verdict_name(c.verdict);
    for (const auto& m : c.matching_readings) detail += " " + m;
    if (c.verdict == CoproductVerdict::Mismatch) detail += " residual " + c.diff.str();
    r.add("Delta(" + c.generator.name() + ")", c.verdict != CoproductVerdict::Mismatch, detail);
  }
  return r;
}

/// The undeformed bound set: exactly Delta(x_mu) Delta(p_mu) >= 1/2.
inline Report canonical_bounds_report(const PhaseSpaceTable& table) {
  Report r{std::string("canonical bounds ") + regime_name(table.regime) + " " + case_name(table.carrier.kind), {}};
  const auto bs = bounds(table);
  r.add("four bounds", bs.size() == 4, std::to_string(bs.size()) + " bounds");
  for (const auto& b : bs) {
    const bool diagonal = axis_of(b.a) == axis_of(b.b) && !b.a.is_momentum() && b.b.is_momentum();
    const auto mag = b.closed ? magnitude(*b.closed) : std::nullopt;
    const bool half = mag && *mag == ClosedForm::constant(Scalar(1));
    r.add("D(" + b.a.display() + ")D(" + b.b.display() + ") >= 1/2", diagonal && half);
  }
  return r;
}

/// Every check for one carrier at one order.
inline VerifyResult verify_carrier(const TwistCarrier& carrier, const VerifyOptions& opt) {
  VerifyResult out;
  const int n = opt.order;
  const PhaseSpaceTable rel = build_phase_space(carrier, n);
  const PhaseSpaceTable gal = contract(rel).table;
  out.reports.push_back(jacobi_check(rel));
  out.reports.push_back(jacobi_check(gal));
  if (opt.jacobi_only) return out;

  const TwistedPoincare hopf(carrier, n);
  out.reports.push_back(coproduct_report(hopf));
  out.reports.push_back(hopf_property_suite(hopf));
  out.reports.push_back(group_consistency(carrier, n));
  out.reports.push_back(pairing_consistency(hopf));
  out.reports.push_back(contraction_properties(rel));
  out.ledger.append(compare_with_reference(rel));
  out.ledger.append(verify_contraction(rel));
  for (const PhaseSpaceTable* t : {&rel, &gal}) {
    if (n == 0)
      out.reports.push_back(canonical_bounds_report(*t));
    else if (n >= 3)  // closed forms need a few orders to be recognized
      out.reports.push_back(compare_bounds(*t));
    const MomentumRealization r = realize(*t);
    out.reports.push_back(vector_field_check(r));
    out.reports.push_back(numeric_check(*t, opt.numeric).report);
  }
  return out;
}

inline std::vector<TwistCarrier> default_carriers() {
  return {TwistCarrier::rotation_gamma(), TwistCarrier::rotation_zero(), TwistCarrier::boost()};
}

}  // namespace twistps
