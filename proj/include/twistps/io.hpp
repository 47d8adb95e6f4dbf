#pragma once

#include "contraction.hpp"
#include "coproduct_oracle.hpp"
#include "reference_tables.hpp"
#include "uncertainty.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>
#include <string>

namespace twistps::io {

using nlohmann::json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline json word_json(const Word& w) {
  json a = json::array();
  for (const auto& g : w) a.push_back(g.name());
  return a;
}

inline Word parse_word(const json& j) {
  Word w;
  for (const auto& s : j) {
    auto g = Generator::parse(s.get<std::string>());
    if (!g) throw ParseError("unknown generator " + s.get<std::string>());
    w.push_back(*g);
  }
  return w;
}

/// {"<power>": [{"re": "1/2", "im": "0", "word": [...]}, ...]}
inline json series_json(const NCExpr& e) {
  json out = json::object();
  for (const auto& [w, c] : e.terms())
    for (int n = 0; n <= c.order(); ++n) {
      if (c[n].is_zero()) continue;
      out[std::to_string(n)].push_back(
          {{"re", c[n].re().get_str()}, {"im", c[n].im().get_str()}, {"word", word_json(w)}});
    }
  return out;
}

inline NCExpr parse_series(const json& j, int order) {
  NCExpr e(order);
  for (const auto& [power, terms] : j.items()) {
    const int n = std::stoi(power);
    for (const auto& t : terms) {
      const Scalar c(parse_rational(t.at("re").get<std::string>()), parse_rational(t.at("im").get<std::string>()));
      e.add_term(parse_word(t.at("word")), DeformSeries::monomial(order, n, c));
    }
  }
  return e;
}

inline json carrier_json(const TwistCarrier& c) {
  json j{{"case", case_name(c.kind)}, {"k", c.k()}, {"l", c.l()}, {"twist", c.describe()}};
  if (c.kind == CarrierCase::RotationGamma) j["gamma"] = c.lambda;
  return j;
}

inline TwistCarrier parse_carrier(const json& j) {
  auto kind = parse_case(j.at("case").get<std::string>());
  if (!kind) throw ParseError("unknown carrier " + j.at("case").get<std::string>());
  const int k = j.at("k").get<int>(), l = j.at("l").get<int>();
  switch (*kind) {
    case CarrierCase::RotationGamma: return TwistCarrier::rotation_gamma(k, l, j.at("gamma").get<int>());
    case CarrierCase::RotationZero: return TwistCarrier::rotation_zero(k, l);
    case CarrierCase::Boost: return TwistCarrier::boost(k, l);
  }
  throw ParseError("unknown carrier");
}

inline json ledger_json(const DiscrepancyLedger& ledger) {
  json a = json::array();
  for (const auto& e : ledger.entries)
    a.push_back({{"table", e.table},
                 {"relation", e.relation},
                 {"role", e.role},
                 {"engine", e.engine},
                 {"reference", e.reference},
                 {"verdict", verdict_name(e.verdict)},
                 {"documented", e.documented},
                 {"evidence", e.evidence}});
  return a;
}

/// All pairs of the table, zero entries included, in canonical order.
inline json table_json(const PhaseSpaceTable& t, const DiscrepancyLedger* ledger = nullptr) {
  json rel = json::array();
  const auto gens = t.generators();
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j) {
      const Generator &a = std::min(gens[i], gens[j]), &b = std::max(gens[i], gens[j]);
      const TableEntry* e = t.entry(a, b);
      json r{{"lhs", {a.name(), b.name()}}};
      r["series"] = e ? series_json(e->value) : json::object();
      if (e && e->closed)
        r["closed_form"] = to_text(*e->closed);
      else if (!e || e->value.is_zero())
        r["closed_form"] = "0";
      else
        r["closed_form"] = nullptr;
      rel.push_back(std::move(r));
    }
  json j{{"carrier", carrier_json(t.carrier)},
         {"order", t.order},
         {"regime", regime_name(t.regime)},
         {"parameter", t.parameter},
         {"relations", std::move(rel)}};
  j["ledger"] = ledger ? ledger_json(*ledger) : json::array();
  return j;
}

inline PhaseSpaceTable parse_table(const json& j) {
  PhaseSpaceTable t;
  t.carrier = parse_carrier(j.at("carrier"));
  t.order = j.at("order").get<int>();
  const std::string regime = j.at("regime").get<std::string>();
  if (regime != "relativistic" && regime != "galilean") throw ParseError("unknown regime " + regime);
  t.regime = regime == "relativistic" ? Regime::Relativistic : Regime::Galilean;
  t.parameter = j.at("parameter").get<std::string>();
  const bool rel = t.regime == Regime::Relativistic;
  t.positions = rel ? relativistic_positions() : galilean_positions();
  t.momenta = rel ? relativistic_momenta() : galilean_momenta();
  for (const auto& r : j.at("relations")) {
    const Word lhs = parse_word(r.at("lhs"));
    if (lhs.size() != 2) throw ParseError("relation lhs must name two generators");
    t.set(lhs[0], lhs[1], parse_series(r.at("series"), t.order));
  }
  return t;
}

inline bool same_table(const PhaseSpaceTable& a, const PhaseSpaceTable& b) {
  if (a.order != b.order || a.regime != b.regime || a.parameter != b.parameter) return false;
  if (a.carrier.kind != b.carrier.kind || a.carrier.alpha != b.carrier.alpha || a.carrier.beta != b.carrier.beta ||
      a.carrier.lambda != b.carrier.lambda)
    return false;
  for (const auto& x : a.generators())
    for (const auto& y : a.generators())
      if (!(a.bracket(x, y) == b.bracket(x, y))) return false;
  return true;
}

inline std::string latex_parameter(const std::string& name) {
  if (name == "xi_hat") return "\\hat{\\xi}";
  if (name == "xi_bar") return "\\bar{\\xi}";
  return "\\xi";
}

inline std::string relation_text(const TableEntry& e) {
  return e.closed ? to_text(*e.closed) : e.value.str();
}

inline std::string table_text(const PhaseSpaceTable& t) {
  std::ostringstream os;
  os << "# " << regime_name(t.regime) << " phase space, carrier " << t.carrier.describe() << ", order " << t.order
     << ", s = 1/(2 " << t.parameter << ")\n";
  for (const auto& [k, e] : t.relations)
    if (!e.value.is_zero())
      os << "[" << k.first.display() << ", " << k.second.display() << "] = " << relation_text(e) << "\n";
  os << "# all other brackets vanish\n";
  return os.str();
}

inline std::string table_latex(const PhaseSpaceTable& t) {
  const std::string param = latex_parameter(t.parameter);
  std::ostringstream os;
  os << "% " << regime_name(t.regime) << " phase space, carrier " << t.carrier.describe() << ", order " << t.order
     << "\n\\begin{gather*}\n";
  bool first = true;
  for (const auto& [k, e] : t.relations) {
    if (e.value.is_zero()) continue;
    if (!first) os << " \\\\\n";
    first = false;
    os << "[" << k.first.latex() << ", " << k.second.latex() << "] = ";
    if (e.closed)
      os << to_latex(*e.closed, param);
    else
      os << "\\text{" << e.value.str() << "}";
  }
  os << "\n\\end{gather*}\n";
  return os.str();
}

inline std::string ledger_text(const DiscrepancyLedger& ledger) {
  std::ostringstream os;
  for (const auto& e : ledger.entries) {
    os << e.table << "  " << e.relation << " " << e.role << ": engine " << e.engine << ", reference " << e.reference
       << " -> " << verdict_name(e.verdict);
    if (e.verdict != Verdict::Match) os << (e.documented ? " (documented)" : " (unexplained)");
    if (!e.evidence.empty()) os << "; " << e.evidence;
    os << "\n";
  }
  return os.str();
}

inline json tensor_json(const TensorExpr& t) {
  json a = json::array();
  for (const auto& [legs, c] : t.terms())
    for (int n = 0; n <= c.order(); ++n) {
      if (c[n].is_zero()) continue;
      a.push_back({{"power", n},
                   {"re", c[n].re().get_str()},
                   {"im", c[n].im().get_str()},
                   {"left", word_json(legs[0])},
                   {"right", word_json(legs[1])}});
    }
  return a;
}

inline json report_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"title", r.title}, {"pass", r.all_pass()}, {"checks", std::move(checks)}};
}

inline std::string report_text(const Report& r, bool failures_only = true) {
  std::ostringstream os;
  os << r.title << ": " << (r.checks.size() - r.failures()) << "/" << r.checks.size() << " pass\n";
  for (const auto& c : r.checks)
    if (!failures_only || !c.pass)
      os << "  " << (c.pass ? "ok   " : "FAIL ") << c.name << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
  return os.str();
}

}  // namespace twistps::io
