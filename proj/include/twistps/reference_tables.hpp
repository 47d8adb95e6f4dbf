#pragma once

#include "contraction.hpp"
#include "heisenberg.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace twistps {

/// Role indices of a carrier: k, l for the rotation plane (or boost and
/// momentum directions), g for the rotation-gamma momentum, a for the
/// remaining spatial axis.
struct Roles {
  int k = 1, l = 2, g = -1, a = -1;

  static Roles of(const TwistCarrier& c) {
    Roles r;
    r.k = c.k();
    r.l = c.l();
    r.g = c.kind == CarrierCase::RotationGamma ? c.lambda : -1;
    r.a = c.a();
    return r;
  }

  int index(char role) const {
    switch (role) {
      case 'k': return k;
      case 'l': return l;
      case 'g': return g;
      case 'a': return a;
      case '0': return 0;
    }
    throw std::invalid_argument(std::string("unknown role index ") + role);
  }
};

namespace detail {

/// "x_k", "p_0", "t", "y_g", "pi_l" -> concrete generator.
inline Generator role_generator(std::string_view tok, const Roles& r) {
  if (tok == "t") return Generator::t();
  const auto us = tok.find('_');
  if (us == std::string_view::npos || us + 2 != tok.size()) throw std::invalid_argument("bad role token");
  const std::string_view head = tok.substr(0, us);
  const int idx = r.index(tok.back());
  if (head == "x") return Generator::x(idx);
  if (head == "p") return Generator::p(idx);
  if (head == "y") return Generator::y(idx);
  if (head == "pi") return Generator::pi(idx);
  throw std::invalid_argument("bad role token");
}

inline std::string role_label(std::string_view tok) {
  std::string s(tok);
  if (!s.empty() && s.back() == 'g') s = s.substr(0, s.size() - 1) + "gamma";
  return s;
}

/// Value grammar: "0" | ["-"][n]"i" | ["-"][n]"i*s*"TOKEN | ["-"]"i*"FUNC"("TOKEN")",
/// where s = 1/(2 xi) and FUNC(p) means FUNC(s*p).
inline ClosedForm role_value(std::string_view v, const Roles& r) {
  if (v == "0") return ClosedForm::constant(Scalar());
  int sign = 1;
  if (v.front() == '-') {
    sign = -1;
    v.remove_prefix(1);
  }
  int mult = 1;
  if (v.front() >= '0' && v.front() <= '9') {
    mult = v.front() - '0';
    v.remove_prefix(1);
  }
  if (v.front() != 'i') throw std::invalid_argument("bad role value");
  v.remove_prefix(1);
  const Scalar c(0, sign * mult);
  if (v.empty()) return ClosedForm::constant(c);
  if (v.substr(0, 3) == "*s*") return ClosedForm::linear(c, 1, role_generator(v.substr(3), r));
  v.remove_prefix(1);
  const auto open = v.find('(');
  const std::string_view fn = v.substr(0, open);
  const Generator arg = role_generator(v.substr(open + 1, v.size() - open - 2), r);
  Shape shape = fn == "sin" ? Shape::Sin : fn == "cos" ? Shape::Cos : fn == "sinh" ? Shape::Sinh : Shape::Cosh;
  return ClosedForm::trig(shape, c, arg);
}

struct RowSpec {
  const char* a;
  const char* b;
  const char* value;
};

// clang-format off
inline const std::vector<RowSpec>& rows(Regime regime, CarrierCase c) {
  static const std::vector<RowSpec> rel_i{
      {"x_0", "x_k", "0"}, {"x_0", "x_l", "0"}, {"x_0", "x_g", "0"}, {"x_k", "x_l", "0"},
      {"x_k", "x_g", "2i*s*x_l"}, {"x_l", "x_g", "-2i*s*x_k"},
      {"x_0", "p_k", "0"}, {"x_0", "p_l", "0"}, {"x_0", "p_g", "0"},
      {"x_k", "p_0", "0"}, {"x_l", "p_0", "0"}, {"x_g", "p_0", "0"},
      {"x_k", "p_g", "0"}, {"x_l", "p_g", "0"},
      {"x_0", "p_0", "-i"}, {"x_g", "p_g", "i"},
      {"x_g", "p_k", "i*s*p_l"}, {"x_g", "p_l", "-i*s*p_k"},
      {"x_l", "p_l", "i*cos(p_g)"}, {"x_k", "p_k", "i*cos(p_g)"},
      {"x_k", "p_l", "i*sin(p_g)"}, {"x_l", "p_k", "-i*sin(p_g)"}};
  static const std::vector<RowSpec> rel_ii{
      {"x_0", "x_a", "0"}, {"x_k", "x_l", "0"},
      {"x_0", "x_k", "2i*s*x_l"}, {"x_0", "x_l", "-2i*s*x_k"}, {"x_k", "x_a", "0"}, {"x_l", "x_a", "0"},
      {"x_0", "p_a", "0"}, {"x_a", "p_0", "0"}, {"x_k", "p_a", "0"}, {"x_l", "p_a", "0"},
      {"x_0", "p_0", "-i"}, {"x_a", "p_a", "i"}, {"x_a", "p_k", "0"}, {"x_a", "p_l", "0"},
      {"x_k", "p_0", "0"}, {"x_l", "p_0", "0"},
      {"x_0", "p_k", "-i*s*p_l"}, {"x_0", "p_l", "i*s*p_k"},
      {"x_l", "p_l", "i*cos(p_0)"}, {"x_k", "p_k", "i*cos(p_0)"},
      {"x_k", "p_l", "i*sin(p_0)"}, {"x_l", "p_k", "-i*sin(p_0)"}};
  static const std::vector<RowSpec> rel_iii{
      {"x_0", "x_a", "0"}, {"x_0", "x_k", "0"}, {"x_k", "x_a", "0"}, {"x_l", "x_a", "0"},
      {"x_0", "x_l", "2i*s*x_k"}, {"x_l", "x_k", "-2i*s*x_0"},
      {"x_l", "p_k", "i*s*p_0"}, {"x_0", "p_0", "-i*cosh(p_l)"},
      {"x_a", "p_a", "i"}, {"x_l", "p_l", "i"},
      {"x_a", "p_0", "0"}, {"x_k", "p_l", "0"}, {"x_0", "p_l", "0"},
      {"x_0", "p_k", "i*sinh(p_l)"}, {"x_k", "p_k", "i*cosh(p_l)"},
      {"x_k", "p_0", "-i*sinh(p_l)"}, {"x_l", "p_0", "i*s*p_k"},
      {"x_k", "p_a", "0"}, {"x_l", "p_a", "0"}, {"x_0", "p_a", "0"}, {"x_a", "p_l", "0"}, {"x_a", "p_k", "0"}};
  static const std::vector<RowSpec> gal_i{
      {"t", "y_k", "0"}, {"t", "y_l", "0"}, {"t", "y_g", "0"}, {"y_k", "y_l", "0"},
      {"y_k", "y_g", "2i*s*y_l"}, {"y_l", "y_g", "-2i*s*y_k"},
      {"t", "pi_k", "0"}, {"t", "pi_l", "0"}, {"t", "pi_g", "0"},
      {"y_k", "pi_0", "0"}, {"y_l", "pi_0", "0"}, {"y_g", "pi_0", "0"},
      {"y_k", "pi_g", "0"}, {"y_l", "pi_g", "0"},
      {"t", "pi_0", "-i"}, {"y_g", "pi_g", "i"},
      {"y_g", "pi_k", "i*s*pi_l"}, {"y_g", "pi_l", "-i*s*pi_k"},
      {"y_l", "pi_l", "i*cos(pi_g)"}, {"y_k", "pi_k", "i*cos(pi_g)"},
      {"y_k", "pi_l", "-i*sin(pi_g)"}, {"y_l", "pi_k", "i*sin(pi_g)"}};
  static const std::vector<RowSpec> gal_ii{
      {"t", "y_a", "0"}, {"y_k", "y_l", "0"},
      {"t", "y_k", "2i*s*y_l"}, {"t", "y_l", "-2i*s*y_k"}, {"y_k", "y_a", "0"}, {"y_l", "y_a", "0"},
      {"t", "pi_a", "0"}, {"y_a", "pi_0", "0"}, {"y_k", "pi_a", "0"}, {"y_l", "pi_a", "0"},
      {"t", "pi_0", "-i"}, {"y_a", "pi_a", "i"}, {"y_a", "pi_k", "0"}, {"y_a", "pi_l", "0"},
      {"y_k", "pi_0", "0"}, {"y_l", "pi_0", "0"},
      {"t", "pi_k", "-i*s*pi_l"}, {"t", "pi_l", "i*s*pi_k"},
      {"y_l", "pi_l", "i*cos(pi_0)"}, {"y_k", "pi_k", "i*cos(pi_0)"},
      {"y_k", "pi_l", "i*sin(pi_0)"}, {"y_l", "pi_k", "-i*sin(pi_0)"}};
  static const std::vector<RowSpec> gal_iii{
      {"t", "y_a", "0"}, {"t", "y_k", "0"}, {"y_k", "y_a", "0"}, {"y_l", "y_a", "0"},
      {"t", "y_l", "0"}, {"y_l", "y_k", "-2i*s*t"},
      {"y_l", "pi_k", "0"}, {"t", "pi_0", "-i"}, {"t", "pi_k", "0"}, {"y_k", "pi_k", "i"},
      {"y_a", "pi_a", "i"}, {"y_l", "pi_l", "i"}, {"y_k", "pi_l", "0"}, {"t", "pi_l", "0"},
      {"y_k", "pi_a", "0"}, {"y_l", "pi_a", "0"}, {"t", "pi_a", "0"}, {"y_a", "pi_l", "0"}, {"y_a", "pi_k", "0"},
      {"y_a", "pi_0", "0"}, {"y_k", "pi_0", "0"}, {"y_l", "pi_0", "0"}};
  const bool rel = regime == Regime::Relativistic;
  switch (c) {
    case CarrierCase::RotationGamma: return rel ? rel_i : gal_i;
    case CarrierCase::RotationZero: return rel ? rel_ii : gal_ii;
    case CarrierCase::Boost: return rel ? rel_iii : gal_iii;
  }
  return rel_i;
}
// clang-format on

}  // namespace detail

/// One published relation with role indices resolved.
struct ReferenceRelation {
  Generator a, b;
  std::string role;  // e.g. "[x_k, p_gamma]"
  ClosedForm value;
};

/// The published commutator rows for a carrier and regime, in print order.
/// The momentum-momentum rows are appended as zeros.
inline std::vector<ReferenceRelation> reference_relations(const TwistCarrier& c, Regime regime) {
  const Roles r = Roles::of(c);
  std::vector<ReferenceRelation> out;
  for (const auto& row : detail::rows(regime, c.kind))
    out.push_back({detail::role_generator(row.a, r), detail::role_generator(row.b, r),
                   "[" + detail::role_label(row.a) + ", " + detail::role_label(row.b) + "]",
                   detail::role_value(row.value, r)});
  const bool rel = regime == Regime::Relativistic;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) {
      const Generator a = rel ? Generator::p(mu) : Generator::pi(mu);
      const Generator b = rel ? Generator::p(nu) : Generator::pi(nu);
      out.push_back({a, b, "[" + a.display() + ", " + b.display() + "]", ClosedForm::constant(Scalar())});
    }
  return out;
}

/// The published rows as a table, for consistency checks of the rows
/// themselves.
inline PhaseSpaceTable reference_table(const TwistCarrier& c, Regime regime, int order) {
  PhaseSpaceTable t;
  t.carrier = c;
  t.order = order;
  t.regime = regime;
  const bool rel = regime == Regime::Relativistic;
  t.parameter = rel ? "xi" : ContractionScheme::for_case(c.kind).parameter();
  t.positions = rel ? relativistic_positions() : galilean_positions();
  t.momenta = rel ? relativistic_momenta() : galilean_momenta();
  for (const auto& row : reference_relations(c, regime)) t.set(row.a, row.b, expand(row.value, order));
  return t;
}

enum class Verdict { Match, SignFlip, Mismatch, Ambiguous };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Match: return "match";
    case Verdict::SignFlip: return "sign-flip";
    case Verdict::Mismatch: return "mismatch";
    case Verdict::Ambiguous: return "ambiguous";
  }
  return "?";
}

struct LedgerEntry {
  std::string table;     // e.g. "relativistic rotation-gamma"
  std::string relation;  // concrete, e.g. "[x_1, p_2]"
  std::string role;
  std::string engine;
  std::string reference;
  Verdict verdict = Verdict::Match;
  /// A sign-flip is documented when the published rows are shown to be
  /// inconsistent on their own.
  bool documented = false;
  std::string evidence;
};

struct DiscrepancyLedger {
  std::vector<LedgerEntry> entries;

  void append(const DiscrepancyLedger& o) { entries.insert(entries.end(), o.entries.begin(), o.entries.end()); }

  std::size_t count(Verdict v) const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [&](const LedgerEntry& e) { return e.verdict == v; }));
  }
  /// Entries that are neither matches nor documented exceptions.
  std::vector<const LedgerEntry*> unexplained() const {
    std::vector<const LedgerEntry*> out;
    for (const auto& e : entries) {
      if (e.verdict == Verdict::Match || e.verdict == Verdict::Ambiguous) continue;
      if (e.verdict == Verdict::SignFlip && e.documented) continue;
      out.push_back(&e);
    }
    return out;
  }
  bool acceptable() const { return unexplained().empty(); }
};

namespace detail {

inline std::string entry_text(const PhaseSpaceTable& t, const Generator& a, const Generator& b) {
  const TableEntry* e = t.entry(a, b);
  if (!e) return "0";
  if (b < a) {
    NCExpr v = -e->value;
    auto cf = recognize_closed_form(v);
    return cf ? to_text(*cf) : v.str();
  }
  return e->closed ? to_text(*e->closed) : e->value.str();
}

inline std::string pair_text(const Generator& a, const Generator& b) {
  return "[" + a.display() + ", " + b.display() + "]";
}

/// Jacobi triples of the table that fail and contain both a and b.
inline std::vector<std::string> failing_triples(const PhaseSpaceTable& t, const RewriteRuleset& rules,
                                                const Generator& a, const Generator& b) {
  std::vector<std::string> out;
  for (const auto& c : t.generators()) {
    if (c == a || c == b) continue;
    if (!jacobiator(t, rules, a, b, c).is_zero())
      out.push_back("(" + a.display() + "," + b.display() + "," + c.display() + ")");
  }
  return out;
}

}  // namespace detail

/// Compares every published row against an engine table of the same carrier
/// and regime. `contracted_reference`, when given, is the contraction of the
/// published relativistic rows and serves as extra evidence for Galilean rows.
inline DiscrepancyLedger compare_rows(const PhaseSpaceTable& engine,
                                      const PhaseSpaceTable* contracted_reference = nullptr) {
  DiscrepancyLedger ledger;
  const int n = engine.order;
  const PhaseSpaceTable ref = reference_table(engine.carrier, engine.regime, n);
  const RewriteRuleset ref_rules = ref.ruleset();
  const std::string title = std::string(regime_name(engine.regime)) + " " + case_name(engine.carrier.kind);
  for (const auto& row : reference_relations(engine.carrier, engine.regime)) {
    LedgerEntry e;
    e.table = title;
    e.relation = detail::pair_text(row.a, row.b);
    e.role = row.role;
    e.engine = detail::entry_text(engine, row.a, row.b);
    e.reference = to_text(row.value);
    const NCExpr mine = engine.bracket(row.a, row.b);
    const NCExpr theirs = expand(row.value, n);
    if (mine == theirs)
      e.verdict = Verdict::Match;
    else if (mine == -theirs)
      e.verdict = Verdict::SignFlip;
    else
      e.verdict = Verdict::Mismatch;
    if (e.verdict != Verdict::Match) {
      const auto bad = detail::failing_triples(ref, ref_rules, row.a, row.b);
      std::string ev;
      if (!bad.empty()) {
        ev = "published rows violate Jacobi on";
        for (const auto& s : bad) ev += " " + s;
      }
      if (contracted_reference) {
        const NCExpr image = contracted_reference->bracket(row.a, row.b);
        if (!(image == theirs)) {
          if (!ev.empty()) ev += "; ";
          const auto cf = recognize_closed_form(image);
          ev += "published relativistic rows contract to " + (cf ? to_text(*cf) : image.str());
        }
      }
      e.documented = e.verdict == Verdict::SignFlip && !ev.empty();
      e.evidence = ev;
    }
    ledger.entries.push_back(std::move(e));
  }
  return ledger;
}

inline DiscrepancyLedger compare_with_reference(const PhaseSpaceTable& table) {
  if (table.regime != Regime::Relativistic) throw std::invalid_argument("expected a relativistic table");
  return compare_rows(table);
}

/// Contracts the engine table and classifies every published Galilean row.
inline DiscrepancyLedger verify_contraction(const PhaseSpaceTable& relativistic) {
  const LimitResult engine = contract(relativistic);
  const LimitResult ref = contract(reference_table(relativistic.carrier, Regime::Relativistic, relativistic.order));
  return compare_rows(engine.table, &ref.table);
}

}  // namespace twistps
