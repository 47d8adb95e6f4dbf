#pragma once

#include "closed_form.hpp"
#include "dual_group.hpp"
#include "poincare.hpp"
#include "report.hpp"

#include <map>
#include <random>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace twistps {

/// Hopf pairing between the dual group (Lambda, a) and the twisted Poincare
/// algebra (M, P). On generators:
///   <Lambda^mu_nu, M^{ab}> = i(eta^{a mu} delta^b_nu - eta^{b mu} delta^a_nu),
///   <a^mu, P_nu> = i delta^mu_nu, all other generator pairs vanish.
/// Products on the algebra side pair through the group coproduct; products
/// on the group side pair through the twisted coproduct.
class Pairing {
 public:
  explicit Pairing(const TwistedPoincare& hopf) : hopf_(&hopf) {}

  int order() const { return hopf_->order(); }

  /// Generator table (algebra generator with lowered indices).
  static Scalar generator_value(const Generator& g, const Generator& u) {
    if (g.kind == Kind::A && u.kind == Kind::P) return g.i == u.i ? Scalar::i() : Scalar();
    if (g.kind == Kind::Lambda && u.kind == Kind::M) {
      // M_{ab} = eta_aa eta_bb M^{ab}
      const int a = u.i, b = u.j, mu = g.i, nu = g.j;
      const int raised = Metric::eta(a, mu) * Metric::delta(b, nu) - Metric::eta(b, mu) * Metric::delta(a, nu);
      return Scalar(0, Metric::eta(a) * Metric::eta(b) * raised);
    }
    return Scalar();
  }

  /// <g, u> for arbitrary (not necessarily canonical) words.
  DeformSeries pair(const Word& g, const Word& u) const {
    const int n = order();
    if (g.empty()) return algebra_counit(u, n);
    if (u.empty()) return group_counit(g, n);
    if (g.size() == 1 && u.size() == 1) return DeformSeries(n, generator_value(g[0], u[0]));
    if (g.size() == 1) {
      // <g, u1 rest> = sum <g_(1), u1> <g_(2), rest>
      const Word head{u[0]};
      const Word rest(u.begin() + 1, u.end());
      DeformSeries out(n);
      const TensorExpr dg = group_coproduct(g[0], n);
      for (const auto& [k, c] : dg.terms()) {
        DeformSeries first = pair(k[0], head);
        if (first.is_zero()) continue;
        DeformSeries second = pair(k[1], rest);
        if (second.is_zero()) continue;
        out += c * first * second;
      }
      return out;
    }
    // <g1 grest, u> = sum <g1, u_(1)> <grest, u_(2)>
    const Word head{g[0]};
    const Word rest(g.begin() + 1, g.end());
    DeformSeries out(n);
    const TensorExpr du = hopf_->coproduct(u);
    for (const auto& [k, c] : du.terms()) {
      DeformSeries first = pair(head, k[0]);
      if (first.is_zero()) continue;
      DeformSeries second = pair(rest, k[1]);
      if (second.is_zero()) continue;
      out += c * first * second;
    }
    return out;
  }

  /// Bilinear extension.
  DeformSeries pair(const NCExpr& g, const NCExpr& u) const {
    DeformSeries out(std::min({order(), g.order(), u.order()}));
    for (const auto& [gw, gc] : g.terms())
      for (const auto& [uw, uc] : u.terms()) out += gc * uc * pair(gw, uw);
    return out;
  }

 private:
  const TwistedPoincare* hopf_;
};

/// [Q, R] = R_(1) <Q_(1), R_(2)> Q_(2) - R Q in the Heisenberg double.
/// The result uses the mixed alphabet; words are algebra part then group part.
inline NCExpr cross_relation(const Generator& q, const Generator& r, const Pairing& pairing,
                             const TwistedPoincare& hopf) {
  if (!q.is_group_side() || !r.is_algebra_side())
    throw std::invalid_argument("cross_relation expects Q in {Lambda, a} and R in {M, P}");
  const int n = hopf.order();
  NCExpr out(n);
  const TensorExpr dq = group_coproduct(q, n);
  const TensorExpr dr = hopf.coproduct(r);
  for (const auto& [rk, rc] : dr.terms())
    for (const auto& [qk, qc] : dq.terms()) {
      DeformSeries v = pairing.pair(qk[0], rk[1]);
      if (v.is_zero()) continue;
      Word w = rk[0];
      w.insert(w.end(), qk[1].begin(), qk[1].end());
      out.add_term(w, rc * qc * v);
    }
  out.add_term(Word{r, q}, DeformSeries(n, -1));
  return out;
}

/// Checks that the pairing annihilates the defining relations on both sides:
/// <g, uv - vu - [u,v]> = 0 for group words g and <gh - hg - [g,h], u> = 0
/// for algebra words u. Generators are checked exhaustively, length-two
/// partners are drawn from a seeded generator.
inline Report pairing_consistency(const TwistedPoincare& hopf, int samples = 50, std::uint64_t seed = 1) {
  Report r{"pairing " + std::string(case_name(hopf.carrier().kind)), {}};
  const int n = hopf.order();
  const Pairing pairing(hopf);
  const RewriteRuleset grules = group_rules(hopf.carrier(), n);
  const auto ug = poincare_generators();
  const auto gg = group_generators();
  std::mt19937_64 rng(seed);
  auto pick = [&](const std::vector<Generator>& v) { return v[std::uniform_int_distribution<size_t>(0, v.size() - 1)(rng)]; };
  auto relation = [&](const Generator& a, const Generator& b, const NCExpr& br) {
    NCExpr e(n);
    e.add_term(Word{a, b}, DeformSeries(n, 1));
    e.add_term(Word{b, a}, DeformSeries(n, -1));
    return e - br;
  };
  auto record = [&](const std::string& name, const DeformSeries& v) { r.add(name, v.is_zero(), v.is_zero() ? "" : v.str()); };

  for (size_t a = 0; a < ug.size(); ++a)
    for (size_t b = a + 1; b < ug.size(); ++b) {
      const NCExpr rel = relation(ug[a], ug[b], hopf.rules().bracket(ug[a], ug[b], n));
      for (const auto& g : gg) record("<" + g.name() + ",[" + ug[a].name() + "," + ug[b].name() + "]>",
                                      pairing.pair(NCExpr::generator(n, g), rel));
    }
  for (int k = 0; k < samples; ++k) {
    const Generator u = pick(ug), v = pick(ug), g1 = pick(gg), g2 = pick(gg);
    if (u == v) continue;
    const NCExpr rel = relation(u, v, hopf.rules().bracket(u, v, n));
    NCExpr g(n);
    g.add_term(Word{g1, g2}, DeformSeries(n, 1));
    record("<" + g1.name() + g2.name() + ",[" + u.name() + "," + v.name() + "]>", pairing.pair(g, rel));
  }
  for (size_t a = 0; a < gg.size(); ++a)
    for (size_t b = a + 1; b < gg.size(); ++b) {
      const NCExpr rel = relation(gg[a], gg[b], grules.bracket(gg[a], gg[b], n));
      for (const auto& u : ug) record("<[" + gg[a].name() + "," + gg[b].name() + "]," + u.name() + ">",
                                      pairing.pair(rel, NCExpr::generator(n, u)));
    }
  for (int k = 0; k < samples; ++k) {
    const Generator g = pick(gg), h = pick(gg), u1 = pick(ug), u2 = pick(ug);
    if (g == h) continue;
    const NCExpr rel = relation(g, h, grules.bracket(g, h, n));
    NCExpr u(n);
    u.add_term(Word{u1, u2}, DeformSeries(n, 1));
    record("<[" + g.name() + "," + h.name() + "]," + u1.name() + u2.name() + ">", pairing.pair(rel, u));
  }
  return r;
}

enum class Regime { Relativistic, Galilean };

inline const char* regime_name(Regime r) { return r == Regime::Relativistic ? "relativistic" : "galilean"; }

/// One commutator [lhs.first, lhs.second] with its series and, when
/// recognized, its closed form.
struct TableEntry {
  NCExpr value;
  std::optional<ClosedForm> closed;
};

/// Complete commutator table of a phase space. Keys are ordered pairs (A, B)
/// with A < B in canonical order.
struct PhaseSpaceTable {
  TwistCarrier carrier;
  int order = 0;
  Regime regime = Regime::Relativistic;
  /// Name of the deformation parameter: xi, xi_hat or xi_bar.
  std::string parameter = "xi";
  std::vector<Generator> positions;
  std::vector<Generator> momenta;
  std::map<std::pair<Generator, Generator>, TableEntry> relations;

  std::vector<Generator> generators() const {
    std::vector<Generator> g = positions;
    g.insert(g.end(), momenta.begin(), momenta.end());
    return g;
  }

  /// [a, b] including the antisymmetric partner.
  NCExpr bracket(const Generator& a, const Generator& b) const {
    if (a == b) return NCExpr(order);
    if (b < a) return -bracket(b, a);
    auto it = relations.find({a, b});
    return it == relations.end() ? NCExpr(order) : it->second.value;
  }

  const TableEntry* entry(const Generator& a, const Generator& b) const {
    auto it = relations.find(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
    return it == relations.end() ? nullptr : &it->second;
  }

  void set(const Generator& a, const Generator& b, NCExpr value) {
    if (b < a) {
      set(b, a, -value);
      return;
    }
    TableEntry e{std::move(value), std::nullopt};
    e.closed = recognize_closed_form(e.value);
    relations.insert_or_assign({a, b}, std::move(e));
  }

  RewriteRuleset ruleset() const {
    RewriteRuleset rules;
    for (const auto& [k, e] : relations) rules.set_commutator(k.first, k.second, e.value);
    return rules;
  }

  /// Every relation truncated to a lower order.
  PhaseSpaceTable truncated(int n) const {
    PhaseSpaceTable t = *this;
    t.order = std::min(n, order);
    t.relations.clear();
    for (const auto& [k, e] : relations) t.set(k.first, k.second, e.value.truncated(t.order));
    return t;
  }
};

inline std::vector<Generator> relativistic_positions() {
  return {Generator::x(0), Generator::x(1), Generator::x(2), Generator::x(3)};
}
inline std::vector<Generator> relativistic_momenta() {
  return {Generator::p(0), Generator::p(1), Generator::p(2), Generator::p(3)};
}

/// Identification of the Heisenberg double with phase space:
/// x_mu = eta_{mu nu} a^nu, p_mu = P_mu.
inline SubstitutionMap position_identification() {
  SubstitutionMap m;
  for (int mu = 0; mu < 4; ++mu) {
    m[Generator::a(mu)] = {Scalar(Metric::eta(mu)), 0, Generator::x(mu)};
    m[Generator::P(mu)] = {Scalar(1), 0, Generator::p(mu)};
  }
  return m;
}

/// Assembles [x,x] from the group relations, [x,p] from the cross-relations
/// and [p,p] = 0 from the undeformed algebra sector.
inline PhaseSpaceTable build_phase_space(const TwistCarrier& carrier, int order) {
  const TwistedPoincare hopf(carrier, order);
  const Pairing pairing(hopf);
  const RewriteRuleset grules = group_rules(carrier, order);
  const SubstitutionMap ident = position_identification();

  PhaseSpaceTable t;
  t.carrier = carrier;
  t.order = order;
  t.positions = relativistic_positions();
  t.momenta = relativistic_momenta();
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) {
      const NCExpr aa = grules.bracket(Generator::a(mu), Generator::a(nu), order);
      const Scalar sign(Metric::eta(mu) * Metric::eta(nu));
      t.set(Generator::x(mu), Generator::x(nu), sign * substitute_plain(aa, ident));
      t.set(Generator::p(mu), Generator::p(nu), NCExpr(order));
    }
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const NCExpr ap = cross_relation(Generator::a(mu), Generator::P(nu), pairing, hopf);
      for (const auto& [w, c] : ap.terms())
        for (const auto& g : w)
          if (!g.is_algebra_side())
            throw std::logic_error("cross relation [a,P] contains group generators: " + ap.str());
      t.set(Generator::x(mu), Generator::p(nu), Scalar(Metric::eta(mu)) * substitute_plain(ap, ident));
    }
  return t;
}

/// [[x,y],z] + [[y,z],x] + [[z,x],y] with the table as rewrite system.
inline NCExpr jacobiator(const PhaseSpaceTable& table, const RewriteRuleset& rules, const Generator& x,
                         const Generator& y, const Generator& z) {
  auto g = [&](const Generator& v) { return NCExpr::generator(table.order, v); };
  return commutator(table.bracket(x, y), g(z), rules) + commutator(table.bracket(y, z), g(x), rules) +
         commutator(table.bracket(z, x), g(y), rules);
}

/// Jacobi identity on every 3-subset of the table's generators.
inline Report jacobi_check(const PhaseSpaceTable& table) {
  Report r{std::string("jacobi ") + regime_name(table.regime) + " " + case_name(table.carrier.kind), {}};
  const RewriteRuleset rules = table.ruleset();
  const auto gens = table.generators();
  for (size_t a = 0; a < gens.size(); ++a)
    for (size_t b = a + 1; b < gens.size(); ++b)
      for (size_t c = b + 1; c < gens.size(); ++c) {
        const NCExpr s = jacobiator(table, rules, gens[a], gens[b], gens[c]);
        r.add("(" + gens[a].name() + "," + gens[b].name() + "," + gens[c].name() + ")", s.is_zero(),
              s.is_zero() ? "" : s.str());
      }
  return r;
}

}  // namespace twistps
