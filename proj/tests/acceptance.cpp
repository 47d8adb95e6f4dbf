// One line per acceptance criterion; exit status is nonzero when any fails.
#include <twistps/io.hpp>
#include <twistps/pipeline.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace twistps;

namespace {

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
  void require(const Report& r) {
    if (r.all_pass()) return;
    pass = false;
    std::size_t shown = 0;
    for (const auto& c : r.checks)
      if (!c.pass && shown++ < 5) notes.push_back(r.title + ": " + c.name + (c.detail.empty() ? "" : " " + c.detail));
  }
  void require(const DiscrepancyLedger& l) {
    for (const auto* e : l.unexplained()) {
      pass = false;
      notes.push_back(e->table + " " + e->relation + ": engine " + e->engine + ", reference " + e->reference + " (" +
                      verdict_name(e->verdict) + ")");
    }
  }
};

const std::vector<TwistCarrier> carriers = default_carriers();

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Outcome coproducts() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t matched = 0, ambiguous = 0;
  for (const auto& c : carriers) {
    const TwistedPoincare h(c, 6);
    for (const auto& cmp : verify_coproducts(h)) {
      const std::string name = std::string(case_name(c.kind)) + " Delta(" + cmp.generator.name() + ")";
      if (cmp.generator.kind == Kind::P)
        o.require(cmp.verdict == CoproductVerdict::Match, name + " " + verdict_name(cmp.verdict));
      else
        o.require(cmp.verdict != CoproductVerdict::Mismatch, name + " mismatch");
      matched += cmp.verdict == CoproductVerdict::Match;
      ambiguous += cmp.verdict == CoproductVerdict::Ambiguous;
    }
    o.require(check_coassociativity(h));
  }
  const double dt = seconds_since(t0);
  o.require(dt < 60, "runtime " + fmt("%.1f s", dt));
  o.summary = std::to_string(matched) + "/30 match, " + std::to_string(ambiguous) + " ambiguous, " + fmt("%.1f s", dt);
  return o;
}

Outcome tables() {
  Outcome o;
  std::size_t flips = 0, rows = 0;
  for (const auto& c : carriers) {
    const PhaseSpaceTable t = build_phase_space(c, 6);
    const DiscrepancyLedger l = compare_with_reference(t);
    o.require(l);
    flips += l.count(Verdict::SignFlip);
    rows += l.entries.size();
    const NCExpr x0p0 = t.bracket(Generator::x(0), Generator::p(0));
    if (c.kind == CarrierCase::Boost)
      o.require(x0p0 == expand(ClosedForm::trig(Shape::Cosh, -Scalar::i(), Generator::p(c.l())), 6),
                "boost [x0,p0] = " + x0p0.str());
    else
      o.require(x0p0 == NCExpr::constant(6, -Scalar::i()), "[x0,p0] = " + x0p0.str());
    if (c.kind == CarrierCase::RotationGamma) {
      const NCExpr v = t.bracket(Generator::x(c.k()), Generator::x(c.lambda));
      o.require(v == expand(ClosedForm::linear(Scalar(0, 2), 1, Generator::x(c.l())), 6), "[x_k,x_g] = " + v.str());
    }
  }
  o.summary = std::to_string(rows) + " rows, " + std::to_string(flips) + " documented sign-flips";
  return o;
}

Outcome jacobi() {
  Outcome o;
  std::size_t triples = 0;
  for (const auto& c : carriers) {
    const PhaseSpaceTable rel = build_phase_space(c, 8);
    for (const Report& r : {jacobi_check(rel), jacobi_check(contract(rel).table)}) {
      o.require(r);
      o.require(r.checks.size() == 56, r.title + " has " + std::to_string(r.checks.size()) + " triples");
      triples += r.checks.size() - r.failures();
    }
  }
  o.summary = std::to_string(triples) + "/336 triples vanish at order 8";
  return o;
}

Outcome contraction() {
  Outcome o;
  std::size_t rows = 0, flips = 0;
  for (const auto& c : carriers) {
    const PhaseSpaceTable rel = build_phase_space(c, 6);
    o.require(contraction_properties(rel));
    const DiscrepancyLedger l = verify_contraction(rel);
    o.require(l);
    rows += l.entries.size();
    flips += l.count(Verdict::SignFlip);
    if (c.kind == CarrierCase::Boost) {
      const LimitResult g = contract(rel);
      const NCExpr v = g.table.bracket(Generator::y(c.l()), Generator::y(c.k()));
      o.require(v == expand(ClosedForm::linear(Scalar(0, -2), 1, Generator::t()), 6), "[y_l,y_k] = " + v.str());
    }
  }
  o.summary = std::to_string(rows) + " rows, " + std::to_string(flips) + " documented sign-flips";
  return o;
}

Outcome classical() {
  Outcome o;
  for (const auto& c : carriers) {
    const PhaseSpaceTable rel = build_phase_space(c, 6).truncated(0);
    const PhaseSpaceTable gal = contract(build_phase_space(c, 6)).table.truncated(0);
    for (const PhaseSpaceTable* t : {&rel, &gal}) {
      for (const auto& a : t->generators())
        for (const auto& b : t->generators()) {
          if (!(a < b)) continue;
          const bool diagonal = !a.is_momentum() && b.is_momentum() && axis_of(a) == axis_of(b);
          const Scalar expect = diagonal ? Scalar(0, Metric::eta(axis_of(a))) : Scalar();
          o.require(t->bracket(a, b) == NCExpr::constant(0, expect),
                    std::string(regime_name(t->regime)) + " [" + a.name() + "," + b.name() + "]");
        }
      o.require(canonical_bounds_report(*t));
    }
  }
  o.summary = "6 tables canonical, 4 bounds each";
  return o;
}

Outcome bound_lists() {
  Outcome o;
  std::size_t ok = 0, total = 0;
  for (const auto& c : carriers) {
    const PhaseSpaceTable rel = build_phase_space(c, 6);
    for (const Report& r : {compare_bounds(rel), compare_bounds(contract(rel).table)}) {
      o.require(r);
      ok += r.checks.size() - r.failures();
      total += r.checks.size();
    }
  }
  o.summary = std::to_string(ok) + "/" + std::to_string(total) + " bound checks";
  return o;
}

Outcome numerics() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const NumericConfig cfg;
  double slack = 1e300, rel = 0;
  for (const auto& c : carriers) {
    const PhaseSpaceTable r = build_phase_space(c, 8);
    const PhaseSpaceTable g = contract(r).table;
    for (const PhaseSpaceTable* t : {&r, &g}) {
      o.require(vector_field_check(realize(*t)));
      const NumericSummary s = numeric_check(*t, cfg);
      o.require(s.report);
      slack = std::min(slack, s.worst_slack);
      rel = std::max(rel, s.worst_relative);
    }
  }
  const double dt = seconds_since(t0);
  o.require(dt < 300, "runtime " + fmt("%.1f s", dt));
  o.summary = std::to_string(cfg.states) + " states per table, worst slack " + sci(slack) + ", worst relative " +
              sci(rel) + ", " + fmt("%.1f s", dt);
  return o;
}

Outcome hopf() {
  Outcome o;
  std::size_t checks = 0;
  for (const auto& c : carriers) {
    const Report r = hopf_property_suite(TwistedPoincare(c, 8));
    o.require(r);
    checks += r.checks.size();
  }
  o.summary = std::to_string(checks) + " checks at order 8";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"twisted coproducts vs closed forms (order 6)", coproducts},
      {"relativistic tables vs published rows (order 6)", tables},
      {"Jacobi closure (order 8)", jacobi},
      {"contraction to the Galilean tables", contraction},
      {"classical limit and canonical bounds", classical},
      {"uncertainty bound lists", bound_lists},
      {"numeric realization and vector fields", numerics},
      {"Hopf property suite (order 8)", hopf},
  };
  int failed = 0;
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    Outcome o;
    try {
      o = criteria[n].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.summary = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::cout << "criterion " << n + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[n].first << "  ["
              << o.summary << "]\n";
    for (const auto& note : o.notes) std::cout << "    " << note << "\n";
    std::cout.flush();
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
