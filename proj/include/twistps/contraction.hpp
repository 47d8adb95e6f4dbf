#pragma once

#include "heisenberg.hpp"
#include "report.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace twistps {

/// Nonrelativistic rescaling x_0 = c t, x_i = y_i, p_0 = pi_0 / c, p_i = pi_i
/// together with a per-case rescaling of the deformation parameter:
///   rotation-gamma: xi unchanged
///   rotation-zero:  xi = xi_hat / c   (s = c * s_hat)
///   boost:          xi = c * xi_bar   (s = s_bar / c)
struct ContractionScheme {
  CarrierCase kind = CarrierCase::RotationGamma;

  static ContractionScheme for_case(CarrierCase c) { return ContractionScheme{c}; }

  /// Power of c carried by s after the rescaling.
  int c_per_s() const {
    switch (kind) {
      case CarrierCase::RotationGamma: return 0;
      case CarrierCase::RotationZero: return 1;
      case CarrierCase::Boost: return -1;
    }
    return 0;
  }

  std::string parameter() const {
    switch (kind) {
      case CarrierCase::RotationGamma: return "xi";
      case CarrierCase::RotationZero: return "xi_hat";
      case CarrierCase::Boost: return "xi_bar";
    }
    return "xi";
  }

  SubstitutionMap variables() const {
    SubstitutionMap m;
    m[Generator::x(0)] = {Scalar(1), 1, Generator::t()};
    m[Generator::p(0)] = {Scalar(1), -1, Generator::pi(0)};
    for (int i = 1; i <= 3; ++i) {
      m[Generator::x(i)] = {Scalar(1), 0, Generator::y(i)};
      m[Generator::p(i)] = {Scalar(1), 0, Generator::pi(i)};
    }
    return m;
  }
};

using TablePair = std::pair<Generator, Generator>;

/// Relations of a rescaled table, each graded by the power of c.
struct GradedTable {
  TwistCarrier carrier;
  int order = 0;
  std::string parameter;
  std::map<TablePair, CGraded> relations;
};

inline std::vector<Generator> galilean_positions() {
  return {Generator::t(), Generator::y(1), Generator::y(2), Generator::y(3)};
}
inline std::vector<Generator> galilean_momenta() {
  return {Generator::pi(0), Generator::pi(1), Generator::pi(2), Generator::pi(3)};
}

inline GradedTable rescale(const PhaseSpaceTable& table, const ContractionScheme& scheme) {
  if (table.regime != Regime::Relativistic) throw std::invalid_argument("rescale expects a relativistic table");
  if (table.carrier.kind != scheme.kind)
    throw std::invalid_argument(std::string("contraction scheme ") + case_name(scheme.kind) +
                                " does not match carrier " + case_name(table.carrier.kind));
  const SubstitutionMap vars = scheme.variables();
  GradedTable g{table.carrier, table.order, scheme.parameter(), {}};
  for (const auto& [key, e] : table.relations) {
    const ScaledGenerator& a = vars.at(key.first);
    const ScaledGenerator& b = vars.at(key.second);
    // [c^m A', c^n B'] = R  =>  [A', B'] = c^-(m+n) R
    const int shift = a.c_power + b.c_power;
    CGraded shifted;
    for (auto& [grade, expr] : substitute(e.value, vars, scheme.c_per_s()))
      shifted.emplace(grade - shift, std::move(expr));
    TablePair k{a.target, b.target};
    if (k.second < k.first) {
      std::swap(k.first, k.second);
      for (auto& [grade, expr] : shifted) expr = -expr;
    }
    g.relations.emplace(k, std::move(shifted));
  }
  return g;
}

struct LimitResult {
  PhaseSpaceTable table;
  /// Relations with a positive power of c and their leading power.
  std::map<TablePair, int> divergences;
  /// Relations that lost terms of negative c power.
  std::map<TablePair, NCExpr> suppressed;

  bool finite() const { return divergences.empty(); }
};

/// c -> infinity: keeps the c^0 part of every relation.
inline LimitResult take_limit(const GradedTable& graded) {
  LimitResult r;
  PhaseSpaceTable& t = r.table;
  t.carrier = graded.carrier;
  t.order = graded.order;
  t.regime = Regime::Galilean;
  t.parameter = graded.parameter;
  t.positions = galilean_positions();
  t.momenta = galilean_momenta();
  for (const auto& [key, parts] : graded.relations) {
    NCExpr kept(graded.order);
    NCExpr dropped(graded.order);
    for (const auto& [grade, expr] : parts) {
      if (grade > 0) {
        auto [it, fresh] = r.divergences.emplace(key, grade);
        if (!fresh) it->second = std::max(it->second, grade);
      } else if (grade == 0) {
        kept += expr;
      } else {
        dropped += expr;
      }
    }
    if (!dropped.is_zero()) r.suppressed.emplace(key, dropped);
    t.set(key.first, key.second, kept);
  }
  return r;
}

inline LimitResult contract(const PhaseSpaceTable& table) {
  return take_limit(rescale(table, ContractionScheme::for_case(table.carrier.kind)));
}

/// Checks on a contraction that do not depend on the printed tables: the
/// limit is finite, it commutes with the classical limit, the result closes
/// under Jacobi, and for the boost carrier every hyperbolic correction beyond
/// the leading term is suppressed.
inline Report contraction_properties(const PhaseSpaceTable& table) {
  Report r{std::string("contraction ") + case_name(table.carrier.kind), {}};
  const LimitResult lim = contract(table);
  std::string div;
  for (const auto& [k, p] : lim.divergences) div += "[" + k.first.name() + "," + k.second.name() + "]~c^" + std::to_string(p) + " ";
  r.add("finite limit", lim.finite(), div);

  const LimitResult classical_first = contract(table.truncated(0));
  const PhaseSpaceTable limit_first = lim.table.truncated(0);
  bool commute = true;
  std::string which;
  for (const auto& a : limit_first.generators())
    for (const auto& b : limit_first.generators())
      if (a < b && !(limit_first.bracket(a, b) == classical_first.table.bracket(a, b))) {
        commute = false;
        which += "[" + a.name() + "," + b.name() + "] ";
      }
  r.add("commutes with classical limit", commute, which);
  r.append(jacobi_check(lim.table));

  if (table.carrier.kind == CarrierCase::Boost) {
    const ContractionScheme scheme = ContractionScheme::for_case(CarrierCase::Boost);
    const SubstitutionMap vars = scheme.variables();
    for (const auto& [key, e] : table.relations) {
      if (!e.closed || (e.closed->shape != Shape::Sinh && e.closed->shape != Shape::Cosh)) continue;
      // drop the lowest s power, the remainder must be strictly suppressed
      NCExpr correction = e.value;
      int lowest = e.value.order() + 1;
      for (const auto& [w, c] : e.value.terms()) lowest = std::min(lowest, c.valuation());
      for (const auto& [w, c] : e.value.terms())
        correction.add_term(w, -DeformSeries::monomial(e.value.order(), lowest, c.coeff(lowest)));
      const int shift = vars.at(key.first).c_power + vars.at(key.second).c_power;
      bool suppressed = true;
      for (const auto& [grade, expr] : substitute(correction, vars, scheme.c_per_s()))
        if (grade - shift >= 0) suppressed = false;
      r.add("hyperbolic correction suppressed in [" + key.first.name() + "," + key.second.name() + "]", suppressed);
    }
  }
  return r;
}

}  // namespace twistps
