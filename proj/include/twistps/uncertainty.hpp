#pragma once

#include "reference_tables.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace twistps {

/// Delta(A) Delta(B) >= |<C>| / 2 with C = [A, B] taken from a table.
struct UncertaintyBound {
  Generator a, b;
  NCExpr commutator;
  std::optional<ClosedForm> closed;
  Regime regime = Regime::Relativistic;
};

/// One bound per nonzero commutator of the table.
inline std::vector<UncertaintyBound> bounds(const PhaseSpaceTable& table) {
  std::vector<UncertaintyBound> out;
  for (const auto& [k, e] : table.relations)
    if (!e.value.is_zero()) out.push_back({k.first, k.second, e.value, e.closed, table.regime});
  return out;
}

/// |C| as a closed form: the prefactor replaced by its modulus. Only unit
/// phases (+-1, +-i) are stripped.
inline std::optional<ClosedForm> magnitude(const ClosedForm& f) {
  ClosedForm m = f;
  const Scalar& c = f.prefactor;
  if (c.is_real())
    m.prefactor = Scalar(abs(c.re()));
  else if (sgn(c.re()) == 0)
    m.prefactor = Scalar(abs(c.im()));
  else
    return std::nullopt;
  return m;
}

/// Text of the right-hand side, e.g. "1/2*|<cos(s*p_3)>|".
inline std::string bound_rhs_text(const ClosedForm& f) {
  auto m = magnitude(f);
  if (!m) return "1/2*|<" + to_text(f) + ">|";
  if (m->shape == Shape::Constant) return (Scalar(Rational(1, 2)) * m->prefactor).str() + (m->s_power ? "*s^" + std::to_string(m->s_power) : "");
  return "1/2*|<" + to_text(*m) + ">|";
}

namespace detail {

// clang-format off
inline const std::vector<RowSpec>& bound_rows(Regime regime, CarrierCase c) {
  static const std::vector<RowSpec> rel_i{
      {"x_k", "x_g", "2i*s*x_l"}, {"x_l", "x_g", "2i*s*x_k"}, {"x_k", "p_k", "i*cos(p_g)"}, {"x_l", "p_l", "i*cos(p_g)"},
      {"x_0", "p_0", "i"}, {"x_g", "p_g", "i"}, {"x_g", "p_k", "i*s*p_l"}, {"x_g", "p_l", "i*s*p_k"},
      {"x_k", "p_l", "i*sin(p_g)"}, {"x_l", "p_k", "i*sin(p_g)"}};
  static const std::vector<RowSpec> rel_ii{
      {"x_k", "x_0", "2i*s*x_l"}, {"x_l", "x_0", "2i*s*x_k"}, {"x_k", "p_k", "i*cos(p_0)"}, {"x_l", "p_l", "i*cos(p_0)"},
      {"x_0", "p_0", "i"}, {"x_a", "p_a", "i"}, {"x_0", "p_k", "i*s*p_l"}, {"x_0", "p_l", "i*s*p_k"},
      {"x_k", "p_l", "i*sin(p_0)"}, {"x_l", "p_k", "i*sin(p_0)"}};
  static const std::vector<RowSpec> rel_iii{
      {"x_k", "x_l", "2i*s*x_0"}, {"x_l", "x_0", "2i*s*x_k"}, {"x_l", "p_k", "i*s*p_0"}, {"x_0", "p_0", "i*cosh(p_l)"},
      {"x_l", "p_l", "i"}, {"x_a", "p_a", "i"}, {"x_0", "p_k", "i*sinh(p_l)"}, {"x_k", "p_k", "i*cosh(p_l)"},
      {"x_k", "p_0", "i*sinh(p_l)"}, {"x_l", "p_0", "i*s*p_k"}};
  static const std::vector<RowSpec> gal_i{
      {"y_k", "y_g", "2i*s*y_l"}, {"y_l", "y_g", "2i*s*y_k"}, {"y_k", "pi_k", "i*cos(pi_g)"}, {"y_l", "pi_l", "i*cos(pi_g)"},
      {"t", "pi_0", "i"}, {"y_g", "pi_g", "i"}, {"y_g", "pi_k", "i*s*pi_l"}, {"y_g", "pi_l", "i*s*pi_k"},
      {"y_k", "pi_l", "i*sin(pi_g)"}, {"y_l", "pi_k", "i*sin(pi_g)"}};
  static const std::vector<RowSpec> gal_ii{
      {"y_k", "t", "2i*s*y_l"}, {"y_l", "t", "2i*s*y_k"}, {"y_k", "pi_k", "i*cos(pi_0)"}, {"y_l", "pi_l", "i*cos(pi_0)"},
      {"t", "pi_0", "i"}, {"y_a", "pi_a", "i"}, {"t", "pi_k", "i*s*pi_l"}, {"t", "pi_l", "i*s*pi_k"},
      {"y_k", "pi_l", "i*sin(pi_0)"}, {"y_l", "pi_k", "i*sin(pi_0)"}};
  static const std::vector<RowSpec> gal_iii{
      {"y_k", "y_l", "2i*s*t"}, {"t", "pi_0", "i"}, {"y_l", "pi_l", "i"}, {"y_a", "pi_a", "i"}, {"y_k", "pi_k", "i"}};
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

/// A published bound: the unordered pair and |C| as a closed form.
struct ReferenceBound {
  Generator a, b;
  std::string role;
  ClosedForm magnitude;
};

inline std::vector<ReferenceBound> reference_bounds(const TwistCarrier& c, Regime regime) {
  const Roles r = Roles::of(c);
  std::vector<ReferenceBound> out;
  for (const auto& row : detail::bound_rows(regime, c.kind)) {
    Generator a = detail::role_generator(row.a, r), b = detail::role_generator(row.b, r);
    if (b < a) std::swap(a, b);
    out.push_back({a, b, "D(" + detail::role_label(row.a) + ")D(" + detail::role_label(row.b) + ")",
                   *magnitude(detail::role_value(row.value, r))});
  }
  return out;
}

/// Structural comparison of bounds() with the published list: same pairs,
/// same right-hand sides up to a unit phase of the commutator.
inline Report compare_bounds(const PhaseSpaceTable& table) {
  Report r{std::string("bounds ") + regime_name(table.regime) + " " + case_name(table.carrier.kind), {}};
  const auto mine = bounds(table);
  const auto theirs = reference_bounds(table.carrier, table.regime);
  std::map<TablePair, const UncertaintyBound*> by_pair;
  for (const auto& b : mine) by_pair[{b.a, b.b}] = &b;
  std::map<TablePair, bool> seen;
  for (const auto& ref : theirs) {
    const std::string name = "D(" + ref.a.display() + ")D(" + ref.b.display() + ")";
    auto it = by_pair.find({ref.a, ref.b});
    if (it == by_pair.end()) {
      r.add(name, false, "published bound, engine commutator vanishes");
      continue;
    }
    seen[{ref.a, ref.b}] = true;
    const auto& cf = it->second->closed;
    const auto mag = cf ? magnitude(*cf) : std::nullopt;
    const bool same = mag && *mag == ref.magnitude;
    r.add(name, same, same ? bound_rhs_text(ref.magnitude)
                           : "engine " + (mag ? bound_rhs_text(*mag) : it->second->commutator.str()) +
                                 " vs published " + bound_rhs_text(ref.magnitude));
  }
  for (const auto& b : mine)
    if (!seen.count({b.a, b.b}))
      r.add("D(" + b.a.display() + ")D(" + b.b.display() + ")", false,
            "engine bound " + (b.closed ? bound_rhs_text(*b.closed) : b.commutator.str()) + " not in published list");
  return r;
}

// ---------------------------------------------------------------------------
// Momentum-space realization

/// Axis of a position or momentum generator: x_mu, p_mu, pi_mu -> mu; t -> 0; y_i -> i.
inline int axis_of(const Generator& g) {
  switch (g.kind) {
    case Kind::X:
    case Kind::Mom:
    case Kind::Pi:
    case Kind::Y: return g.i;
    case Kind::T: return 0;
    default: break;
  }
  throw std::invalid_argument("generator " + g.name() + " has no phase-space axis");
}

/// X_mu = i sum_nu Phi_{mu nu}(p) d/dp_nu with [x_mu, p_nu] = i Phi_{mu nu}.
/// Phi entries are closed forms; theta holds [x_mu, x_nu] = sum theta x_kappa.
struct MomentumRealization {
  const PhaseSpaceTable* table = nullptr;
  std::array<std::array<ClosedForm, 4>, 4> phi{};
  /// [x_mu, x_nu] as a linear closed form (Constant zero when vanishing).
  std::array<std::array<ClosedForm, 4>, 4> theta{};
  /// Axes that appear in some Phi entry or carry a nontrivial diagonal.
  std::vector<int> active_axes;
};

/// Reads Phi and theta off the table. Throws when an entry has no closed form.
inline MomentumRealization realize(const PhaseSpaceTable& table) {
  MomentumRealization r;
  r.table = &table;
  std::map<int, bool> active;
  for (size_t mu = 0; mu < 4; ++mu)
    for (size_t nu = 0; nu < 4; ++nu) {
      const Generator x = table.positions[mu], p = table.momenta[nu];
      const TableEntry* e = table.entry(x, p);
      if (!e || e->value.is_zero()) {
        r.phi[mu][nu] = ClosedForm::constant(Scalar());
        continue;
      }
      if (!e->closed) throw std::runtime_error("realization refused: no closed form for [" + x.name() + "," + p.name() + "]");
      ClosedForm f = *e->closed;
      f.prefactor = Scalar(0, -1) * f.prefactor;  // Phi = -i C
      r.phi[mu][nu] = f;
      active[static_cast<int>(nu)] = true;
      if (f.shape != Shape::Constant) active[axis_of(f.is_trig() ? f.argument : f.factor)] = true;
    }
  for (size_t mu = 0; mu < 4; ++mu)
    for (size_t nu = 0; nu < 4; ++nu) {
      r.theta[mu][nu] = ClosedForm::constant(Scalar());
      if (mu == nu) continue;
      const NCExpr v = table.bracket(table.positions[mu], table.positions[nu]);
      if (v.is_zero()) continue;
      auto cf = recognize_closed_form(v);
      if (!cf || cf->shape != Shape::Linear)
        throw std::runtime_error("realization refused: [x,x] entry is not linear in x");
      r.theta[mu][nu] = *cf;
    }
  for (const auto& [ax, on] : active) r.active_axes.push_back(ax);
  return r;
}

namespace detail {

/// Momentum generator of an axis in the table's alphabet.
inline NCExpr momentum_expr(const PhaseSpaceTable& t, int axis, int order) {
  return NCExpr::generator(order, t.momenta[static_cast<size_t>(axis)]);
}

}  // namespace detail

/// Symbolic check of [X_mu, X_nu] against the [x,x] rows as vector fields.
/// Component rho of [X_mu, X_nu] is
///   -(Phi_{mu s} d_s Phi_{nu rho} - Phi_{nu s} d_s Phi_{mu rho})
/// and must equal i theta^kappa_{mu nu} Phi_{kappa rho}. Unsymmetrized
/// fields are used; Phi is expanded to the table order.
inline Report vector_field_check(const MomentumRealization& r) {
  const PhaseSpaceTable& t = *r.table;
  const int n = t.order;
  const RewriteRuleset rules = t.ruleset();
  Report rep{std::string("vector fields ") + regime_name(t.regime) + " " + case_name(t.carrier.kind), {}};
  std::array<std::array<NCExpr, 4>, 4> phi;
  for (size_t a = 0; a < 4; ++a)
    for (size_t b = 0; b < 4; ++b) phi[a][b] = expand(r.phi[a][b], n);
  for (size_t mu = 0; mu < 4; ++mu)
    for (size_t nu = mu + 1; nu < 4; ++nu) {
      bool ok = true;
      std::string detail;
      for (size_t rho = 0; rho < 4; ++rho) {
        NCExpr lhs(n);
        for (size_t s = 0; s < 4; ++s) {
          const Generator ps = t.momenta[s];
          lhs -= mul(phi[mu][s], partial_derivative(phi[nu][rho], ps), rules);
          lhs += mul(phi[nu][s], partial_derivative(phi[mu][rho], ps), rules);
        }
        NCExpr rhs(n);
        const ClosedForm& th = r.theta[mu][nu];
        if (th.shape == Shape::Linear) {
          const size_t kappa = static_cast<size_t>(axis_of(th.factor));
          rhs = Scalar::i() * (DeformSeries::monomial(n, th.s_power, th.prefactor) * phi[kappa][rho]);
        }
        if (!(lhs == rhs)) {
          ok = false;
          detail += "component " + std::to_string(rho) + ": " + (lhs - rhs).str() + " ";
        }
      }
      rep.add("[X" + std::to_string(mu) + ",X" + std::to_string(nu) + "]", ok, detail);
    }
  return rep;
}

/// Symmetrization adds (i/2) sum_nu d Phi_{mu nu} / d p_nu, a function of p.
/// It commutes with every momentum, so [X, p] is unchanged; this returns the
/// divergence terms so callers can see whether they vanish.
inline std::array<NCExpr, 4> symmetrization_terms(const MomentumRealization& r) {
  const PhaseSpaceTable& t = *r.table;
  std::array<NCExpr, 4> out{NCExpr(t.order), NCExpr(t.order), NCExpr(t.order), NCExpr(t.order)};
  for (size_t mu = 0; mu < 4; ++mu)
    for (size_t nu = 0; nu < 4; ++nu)
      out[mu] += Scalar(Rational(1, 2)) * Scalar::i() * partial_derivative(expand(r.phi[mu][nu], t.order), t.momenta[nu]);
  return out;
}

// ---------------------------------------------------------------------------
// Numerics. Floating point is confined to this section.

using cplx = std::complex<double>;

/// Separable Gaussian state psi(p) = prod_j g_j(p_j),
/// g(p) = (2 pi sigma^2)^(-1/4) exp(-(p - m)^2 / (4 sigma^2) - i q p).
struct GaussianState {
  std::array<double, 4> mean{};
  std::array<double, 4> width{1, 1, 1, 1};
  std::array<double, 4> shift{};
};

struct NumericConfig {
  double s = 0.5;
  int grid_points = 2048;
  double span = 8.0;
  int refinements = 3;
  int states = 100;
  std::uint64_t seed = 20240601;
  double robertson_slack = -1e-9;
  double relative_tolerance = 1e-8;
  double absolute_floor = 1e-12;
};

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace numeric {

/// c p^k exp(kappa p); the Gaussian factor of the axis is implicit.
struct Mono {
  cplx c;
  int k = 0;
  cplx kappa;
};

using AxisFn = std::vector<Mono>;

inline void add_mono(AxisFn& f, const Mono& m) {
  if (m.c == cplx(0)) return;
  for (auto& x : f)
    if (x.k == m.k && x.kappa == m.kappa) {
      x.c += m.c;
      return;
    }
  f.push_back(m);
}

inline AxisFn multiply(const AxisFn& a, const AxisFn& b) {
  AxisFn r;
  for (const auto& x : a)
    for (const auto& y : b) add_mono(r, {x.c * y.c, x.k + y.k, x.kappa + y.kappa});
  return r;
}

/// A product of axis functions times the Gaussian.
struct Term {
  cplx c{1.0, 0.0};
  std::array<AxisFn, 4> axes{AxisFn{{1.0, 0, 0.0}}, AxisFn{{1.0, 0, 0.0}}, AxisFn{{1.0, 0, 0.0}},
                             AxisFn{{1.0, 0, 0.0}}};
};

using Wave = std::vector<Term>;

/// A multiplication operator c * f(p_axis); axis < 0 means a constant.
struct Multiplier {
  cplx c{0.0, 0.0};
  int axis = -1;
  AxisFn f{{1.0, 0, 0.0}};

  bool is_zero() const { return c == cplx(0); }
};

inline cplx to_complex(const Scalar& z) { return {z.real_double(), z.imag_double()}; }

/// Closed form evaluated at numeric s, as a multiplier in the momentum
/// variable of the given table.
inline Multiplier multiplier(const ClosedForm& f, double s) {
  Multiplier m;
  m.c = to_complex(f.prefactor) * std::pow(s, f.s_power);
  if (f.shape == Shape::Constant) return m;
  if (f.shape == Shape::Linear) {
    m.axis = axis_of(f.factor);
    m.f = {{1.0, 1, 0.0}};
    return m;
  }
  m.c = to_complex(f.prefactor);
  m.axis = axis_of(f.argument);
  const double w = f.multiple.get_d() * s;
  const cplx I(0, 1);
  switch (f.shape) {
    case Shape::Sin: m.f = {{1.0 / (2.0 * I), 0, I * w}, {-1.0 / (2.0 * I), 0, -I * w}}; break;
    case Shape::Cos: m.f = {{0.5, 0, I * w}, {0.5, 0, -I * w}}; break;
    case Shape::Sinh: m.f = {{0.5, 0, w}, {-0.5, 0, -w}}; break;
    case Shape::Cosh: m.f = {{0.5, 0, w}, {0.5, 0, -w}}; break;
    default: break;
  }
  return m;
}

/// d/dp of a multiplier function.
inline AxisFn derivative(const AxisFn& f) {
  AxisFn r;
  for (const auto& m : f) {
    if (m.k > 0) add_mono(r, {m.c * double(m.k), m.k - 1, m.kappa});
    add_mono(r, {m.c * m.kappa, m.k, m.kappa});
  }
  return r;
}

inline Wave apply(const Wave& w, const Multiplier& m) {
  Wave out;
  if (m.is_zero()) return out;
  for (Term t : w) {
    t.c *= m.c;
    if (m.axis >= 0) t.axes[static_cast<size_t>(m.axis)] = multiply(t.axes[static_cast<size_t>(m.axis)], m.f);
    out.push_back(std::move(t));
  }
  return out;
}

inline Wave scaled(Wave w, cplx c) {
  for (auto& t : w) t.c *= c;
  return w;
}

inline void append(Wave& a, const Wave& b) { a.insert(a.end(), b.begin(), b.end()); }

/// d/dp_axis including the Gaussian: g'/g = -(p - m)/(2 sigma^2) - i q.
inline Wave differentiate(const Wave& w, int axis, const GaussianState& st) {
  const size_t j = static_cast<size_t>(axis);
  const double inv = 1.0 / (2.0 * st.width[j] * st.width[j]);
  const cplx lin0(st.mean[j] * inv, -st.shift[j]);
  Wave out;
  for (Term t : w) {
    AxisFn d;
    for (const auto& m : t.axes[j]) {
      if (m.k > 0) add_mono(d, {m.c * double(m.k), m.k - 1, m.kappa});
      add_mono(d, {m.c * (m.kappa + lin0), m.k, m.kappa});
      add_mono(d, {m.c * (-inv), m.k + 1, m.kappa});
    }
    t.axes[j] = std::move(d);
    out.push_back(std::move(t));
  }
  return out;
}

/// Per-axis moments E[p^k exp(kappa p)] under |g|^2 by trapezoid quadrature on
/// mean +- span widths, refined until two successive grids agree.
class Quadrature {
 public:
  Quadrature(const GaussianState& st, const NumericConfig& cfg) : st_(st), cfg_(cfg) {}

  cplx moment(int axis, int k, cplx kappa) {
    const auto key = std::make_tuple(axis, k, kappa.real(), kappa.imag());
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    int points = cfg_.grid_points;
    cplx prev = integrate(axis, k, kappa, points);
    for (int level = 0; level < cfg_.refinements; ++level) {
      points *= 2;
      const cplx next = integrate(axis, k, kappa, points);
      if (std::abs(next - prev) <= 1e-13 * std::max(1.0, std::abs(next))) {
        cache_.emplace(key, next);
        return next;
      }
      prev = next;
    }
    throw QuadratureError("quadrature did not converge on axis " + std::to_string(axis));
  }

  cplx inner(int axis, const AxisFn& a, const AxisFn& b) {
    cplx r = 0;
    for (const auto& x : a)
      for (const auto& y : b) r += std::conj(x.c) * y.c * moment(axis, x.k + y.k, std::conj(x.kappa) + y.kappa);
    return r;
  }

  cplx inner(const Wave& a, const Wave& b) {
    cplx r = 0;
    for (const auto& x : a)
      for (const auto& y : b) {
        cplx prod = std::conj(x.c) * y.c;
        for (int j = 0; j < 4 && prod != cplx(0); ++j)
          prod *= inner(j, x.axes[static_cast<size_t>(j)], y.axes[static_cast<size_t>(j)]);
        r += prod;
      }
    return r;
  }

  /// L2 norm of the state, per axis product.
  double norm() { return std::real(inner(Wave{Term{}}, Wave{Term{}})); }

 private:
  cplx integrate(int axis, int k, cplx kappa, int points) const {
    const size_t j = static_cast<size_t>(axis);
    const double m = st_.mean[j], sg = st_.width[j];
    const double lo = m - cfg_.span * sg, hi = m + cfg_.span * sg;
    const double h = (hi - lo) / (points - 1);
    const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi * sg * sg);
    cplx sum = 0;
    for (int i = 0; i < points; ++i) {
      const double p = lo + h * i;
      const double wt = (i == 0 || i == points - 1) ? 0.5 : 1.0;
      const double dens = norm * std::exp(-(p - m) * (p - m) / (2.0 * sg * sg));
      sum += wt * dens * std::pow(p, k) * std::exp(kappa * p);
    }
    return sum * h;
  }

  GaussianState st_;
  NumericConfig cfg_;
  std::map<std::tuple<int, int, double, double>, cplx> cache_;
};

}  // namespace numeric

/// Applies realized operators to a separable Gaussian state.
class NumericModel {
 public:
  NumericModel(const MomentumRealization& r, const NumericConfig& cfg) : r_(&r), cfg_(cfg) {
    for (size_t mu = 0; mu < 4; ++mu) {
      for (size_t nu = 0; nu < 4; ++nu) phi_[mu][nu] = numeric::multiplier(r.phi[mu][nu], cfg.s);
      // (i/2) sum_nu d Phi_{mu nu} / d p_nu
      for (size_t nu = 0; nu < 4; ++nu) {
        const auto& m = phi_[mu][nu];
        if (m.is_zero() || m.axis != static_cast<int>(nu)) continue;
        numeric::Multiplier d = m;
        d.c *= cplx(0, 0.5);
        d.f = numeric::derivative(m.f);
        div_[mu].push_back(d);
      }
    }
  }

  /// A psi for a position or momentum generator of the table.
  numeric::Wave apply(const Generator& g, const numeric::Wave& psi, const GaussianState& st) const {
    const PhaseSpaceTable& t = *r_->table;
    const int ax = axis_of(g);
    if (g == t.momenta[static_cast<size_t>(ax)]) {
      numeric::Multiplier m;
      m.c = 1.0;
      m.axis = ax;
      m.f = {{1.0, 1, 0.0}};
      return numeric::apply(psi, m);
    }
    numeric::Wave out;
    const size_t mu = static_cast<size_t>(ax);
    for (size_t nu = 0; nu < 4; ++nu) {
      if (phi_[mu][nu].is_zero()) continue;
      numeric::append(out, numeric::scaled(numeric::apply(numeric::differentiate(psi, static_cast<int>(nu), st), phi_[mu][nu]),
                                           cplx(0, 1)));
    }
    for (const auto& d : div_[mu]) numeric::append(out, numeric::apply(psi, d));
    return out;
  }

  /// <C> from the table entry evaluated in the state.
  cplx symbolic_expectation(const Generator& a, const Generator& b, const numeric::Wave& psi,
                            const GaussianState& st, numeric::Quadrature& q) const {
    const PhaseSpaceTable& t = *r_->table;
    const NCExpr c = t.bracket(a, b);
    if (c.is_zero()) return 0;
    const auto cf = recognize_closed_form(c);
    if (!cf) throw std::runtime_error("no closed form for [" + a.name() + "," + b.name() + "]");
    if (cf->shape == Shape::Linear && !cf->factor.is_momentum()) {
      const cplx coeff = numeric::to_complex(cf->prefactor) * std::pow(cfg_.s, cf->s_power);
      return coeff * q.inner(psi, apply(cf->factor, psi, st));
    }
    return q.inner(psi, numeric::apply(psi, numeric::multiplier(*cf, cfg_.s)));
  }

 private:
  const MomentumRealization* r_;
  NumericConfig cfg_;
  std::array<std::array<numeric::Multiplier, 4>, 4> phi_{};
  std::array<std::vector<numeric::Multiplier>, 4> div_{};
};

/// Outcome of one (state, pair) evaluation.
struct NumericSample {
  Generator a, b;
  double delta_a = 0, delta_b = 0;
  cplx realized, symbolic;
  double slack = 0;
  double relative_error = 0;
};

inline NumericSample evaluate_pair(const NumericModel& model, const Generator& a, const Generator& b,
                                   const GaussianState& st, numeric::Quadrature& q) {
  const numeric::Wave psi{numeric::Term{}};
  const numeric::Wave pa = model.apply(a, psi, st), pb = model.apply(b, psi, st);
  NumericSample s;
  s.a = a;
  s.b = b;
  const double ea = std::real(q.inner(psi, pa)), eb = std::real(q.inner(psi, pb));
  s.delta_a = std::sqrt(std::max(0.0, std::real(q.inner(pa, pa)) - ea * ea));
  s.delta_b = std::sqrt(std::max(0.0, std::real(q.inner(pb, pb)) - eb * eb));
  // A, B symmetric: <[A,B]> = <A psi|B psi> - <B psi|A psi>
  s.realized = q.inner(pa, pb) - q.inner(pb, pa);
  s.symbolic = model.symbolic_expectation(a, b, psi, st, q);
  s.slack = s.delta_a * s.delta_b - 0.5 * std::abs(s.realized);
  s.relative_error = std::abs(s.realized - s.symbolic) / std::max(std::abs(s.symbolic), 1e-300);
  return s;
}

/// Random separable Gaussian states from a seeded generator.
inline std::vector<GaussianState> random_states(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> mean(-2.0, 2.0), width(0.3, 1.2), shift(-1.5, 1.5);
  std::vector<GaussianState> out;
  for (int n = 0; n < count; ++n) {
    GaussianState st;
    for (size_t j = 0; j < 4; ++j) {
      st.mean[j] = mean(rng);
      st.width[j] = width(rng);
      st.shift[j] = shift(rng);
    }
    out.push_back(st);
  }
  return out;
}

inline std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

struct NumericSummary {
  std::size_t samples = 0;
  double worst_slack = 0;
  double worst_relative = 0;
  double worst_norm_error = 0;
  Report report;
};

/// Robertson slack and realized-vs-symbolic commutators on random states,
/// over every generator pair of the table.
inline NumericSummary numeric_check(const PhaseSpaceTable& table, const NumericConfig& cfg) {
  const MomentumRealization r = realize(table);
  const NumericModel model(r, cfg);
  NumericSummary sum;
  sum.report.title = std::string("numeric ") + regime_name(table.regime) + " " + case_name(table.carrier.kind);
  sum.worst_slack = INFINITY;
  const auto gens = table.generators();
  const auto states = random_states(cfg.states, cfg.seed);
  std::size_t bad_slack = 0, bad_commutator = 0;
  for (size_t n = 0; n < states.size(); ++n) {
    numeric::Quadrature q(states[n], cfg);
    const double ne = std::abs(q.norm() - 1.0);
    sum.worst_norm_error = std::max(sum.worst_norm_error, ne);
    if (ne > 1e-10) sum.report.add("state " + std::to_string(n) + " normalization", false, sci(ne));
    for (size_t i = 0; i < gens.size(); ++i)
      for (size_t j = i + 1; j < gens.size(); ++j) {
        const NumericSample s = evaluate_pair(model, gens[i], gens[j], states[n], q);
        ++sum.samples;
        sum.worst_slack = std::min(sum.worst_slack, s.slack);
        const double err = std::abs(s.realized - s.symbolic);
        const bool close = err <= cfg.relative_tolerance * std::abs(s.symbolic) + cfg.absolute_floor;
        if (std::abs(s.symbolic) > cfg.absolute_floor) sum.worst_relative = std::max(sum.worst_relative, s.relative_error);
        const std::string name = "state " + std::to_string(n) + " (" + gens[i].name() + "," + gens[j].name() + ")";
        if (s.slack < cfg.robertson_slack && bad_slack++ < 10)
          sum.report.add(name + " robertson", false, "slack " + sci(s.slack));
        if (!close && bad_commutator++ < 10) sum.report.add(name + " commutator", false, "|diff| " + sci(err));
      }
  }
  sum.report.add("robertson slack", sum.worst_slack >= cfg.robertson_slack, "worst " + sci(sum.worst_slack));
  sum.report.add("realized commutators", bad_commutator == 0, "worst relative " + sci(sum.worst_relative));
  return sum;
}

}  // namespace twistps
