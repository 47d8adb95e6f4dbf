#pragma once

#include "closed_form.hpp"
#include "tensor.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace twistps {

/// Minkowski metric diag(-1, +1, +1, +1); raised and lowered forms coincide.
struct Metric {
  static int eta(int mu, int nu) { return mu != nu ? 0 : (mu == 0 ? -1 : 1); }
  static int eta(int mu) { return mu == 0 ? -1 : 1; }
  static int delta(int mu, int nu) { return mu == nu ? 1 : 0; }
};

enum class CarrierCase { RotationGamma, RotationZero, Boost };

inline const char* case_name(CarrierCase c) {
  switch (c) {
    case CarrierCase::RotationGamma: return "rotation-gamma";
    case CarrierCase::RotationZero: return "rotation-zero";
    case CarrierCase::Boost: return "boost";
  }
  return "?";
}

inline std::optional<CarrierCase> parse_case(const std::string& s) {
  if (s == "rotation-gamma") return CarrierCase::RotationGamma;
  if (s == "rotation-zero") return CarrierCase::RotationZero;
  if (s == "boost") return CarrierCase::Boost;
  return std::nullopt;
}

/// Abelian twist carrier {M_{alpha beta}, zeta^lambda P_lambda}.
/// k, l are the role indices: rotation carriers use M_{kl}; the boost uses
/// M_{k0} with P_l. gamma is the spatial P index of the rotation-gamma case.
struct TwistCarrier {
  CarrierCase kind = CarrierCase::RotationGamma;
  int alpha = 1;
  int beta = 2;
  int lambda = 3;
  int gamma_exp = 1;
  std::array<Scalar, 4> zeta{0, 0, 0, 1};

  int k() const { return alpha; }
  int l() const { return kind == CarrierCase::Boost ? lambda : beta; }
  /// Remaining spatial index not in {k, l, gamma}; -1 for rotation-gamma.
  int a() const {
    if (kind == CarrierCase::RotationGamma) return -1;
    for (int m = 1; m <= 3; ++m)
      if (m != k() && m != l()) return m;
    return -1;
  }

  static TwistCarrier rotation_gamma(int k = 1, int l = 2, int gamma = 3) {
    return make(CarrierCase::RotationGamma, k, l, gamma, 1);
  }
  static TwistCarrier rotation_zero(int k = 1, int l = 2) {
    return make(CarrierCase::RotationZero, k, l, 0, 1);
  }
  static TwistCarrier boost(int k = 1, int l = 2) { return make(CarrierCase::Boost, k, 0, l, 0); }

  static TwistCarrier defaults(CarrierCase c) {
    switch (c) {
      case CarrierCase::RotationGamma: return rotation_gamma();
      case CarrierCase::RotationZero: return rotation_zero();
      case CarrierCase::Boost: return boost();
    }
    return rotation_gamma();
  }

  /// Throws std::invalid_argument unless the index pattern fits the case.
  void validate() const {
    auto spatial = [](int m) { return m >= 1 && m <= 3; };
    bool ok = gamma_exp == (kind == CarrierCase::Boost ? 0 : 1);
    switch (kind) {
      case CarrierCase::RotationGamma:
        ok = ok && spatial(alpha) && spatial(beta) && spatial(lambda) && alpha != beta &&
             lambda != alpha && lambda != beta;
        break;
      case CarrierCase::RotationZero:
        ok = ok && spatial(alpha) && spatial(beta) && alpha != beta && lambda == 0;
        break;
      case CarrierCase::Boost:
        ok = ok && spatial(alpha) && beta == 0 && spatial(lambda) && lambda != alpha;
        break;
    }
    if (!ok) throw std::invalid_argument(std::string("invalid indices for carrier ") + case_name(kind));
  }

  std::string describe() const {
    std::string m = "M" + std::to_string(alpha) + std::to_string(beta);
    return std::string(case_name(kind)) + " {" + m + ", P" + std::to_string(lambda) + "}";
  }

 private:
  static TwistCarrier make(CarrierCase c, int alpha, int beta, int lambda, int gexp) {
    TwistCarrier t;
    t.kind = c;
    t.alpha = alpha;
    t.beta = beta;
    t.lambda = lambda;
    t.gamma_exp = gexp;
    t.zeta = {0, 0, 0, 0};
    if (lambda >= 0 && lambda <= 3) t.zeta[static_cast<size_t>(lambda)] = 1;
    t.validate();
    return t;
  }
};

/// The Poincare brackets with eta = diag(-,+,+,+).
inline RewriteRuleset classical_rules(int order) {
  RewriteRuleset rules;
  auto eta = [](int a, int b) { return Scalar(Metric::eta(a, b)); };
  const Scalar i = Scalar::i();
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) {
      const Generator m = Generator::M_ordered(mu, nu);
      for (int rho = 0; rho < 4; ++rho) {
        NCExpr v = i * (eta(nu, rho) * NCExpr::generator(order, Generator::P(mu)) -
                        eta(mu, rho) * NCExpr::generator(order, Generator::P(nu)));
        rules.set_commutator(m, Generator::P(rho), v);
      }
      for (int rho = 0; rho < 4; ++rho)
        for (int sigma = rho + 1; sigma < 4; ++sigma) {
          NCExpr v = i * (eta(mu, sigma) * M(order, nu, rho) - eta(nu, sigma) * M(order, mu, rho) +
                          eta(nu, rho) * M(order, mu, sigma) - eta(mu, rho) * M(order, nu, sigma));
          rules.set_commutator(m, Generator::M_ordered(rho, sigma), v);
        }
    }
  return rules;
}

/// All ten Poincare generators in canonical order.
inline std::vector<Generator> poincare_generators() {
  std::vector<Generator> out;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) out.push_back(Generator::M_ordered(mu, nu));
  for (int mu = 0; mu < 4; ++mu) out.push_back(Generator::P(mu));
  return out;
}

/// zeta^lambda P_lambda
inline NCExpr carrier_momentum(const TwistCarrier& c, int order) {
  NCExpr z(order);
  for (int mu = 0; mu < 4; ++mu)
    if (!c.zeta[static_cast<size_t>(mu)].is_zero())
      z += c.zeta[static_cast<size_t>(mu)] * NCExpr::generator(order, Generator::P(mu));
  return z;
}

inline NCExpr carrier_rotation(const TwistCarrier& c, int order) { return M(order, c.alpha, c.beta); }

/// Primitive coproduct g (x) 1 + 1 (x) g.
inline TensorExpr primitive_coproduct(const Generator& g, int order) {
  const NCExpr one = NCExpr::constant(order, 1);
  const NCExpr e = NCExpr::generator(order, g);
  return tensor(e, one) + tensor(one, e);
}

inline TensorExpr reflected(const TensorExpr& t) {
  TensorExpr r(t.order());
  for (const auto& [k, c] : t.terms()) r.add_term(k, c.reflected());
  return r;
}

/// F = exp(i s zeta^lambda P_lambda ^ M_{alpha beta}) to order N.
inline TensorExpr twist_factor(const TwistCarrier& c, int order) {
  const RewriteRuleset rules = classical_rules(order);
  const TensorExpr x = wedge(carrier_momentum(c, order), carrier_rotation(c, order));
  TensorExpr power = TensorExpr::identity(order);
  TensorExpr f = power;
  for (int n = 1; n <= order; ++n) {
    power = tensor_mul(power, x, rules);
    Scalar coeff = i_pow(n) * Scalar(Rational(1) / factorial(static_cast<unsigned>(n)));
    f += power * DeformSeries::monomial(order, n, coeff);
  }
  return f;
}

/// F^{-1}, obtained from F by s -> -s (the carrier is Abelian).
inline TensorExpr twist_factor_inverse(const TwistCarrier& c, int order) {
  return reflected(twist_factor(c, order));
}

/// Twisted Poincare Hopf algebra: coproducts obtained by conjugating the
/// primitive ones with the twist factor. Immutable after construction.
class TwistedPoincare {
 public:
  TwistedPoincare(const TwistCarrier& carrier, int order)
      : carrier_(carrier), order_(order), rules_(classical_rules(order)) {
    carrier_.validate();
    f_ = twist_factor(carrier_, order_);
    finv_ = reflected(f_);
    for (const auto& g : poincare_generators())
      coproducts_.emplace(g, tensor_mul(tensor_mul(f_, primitive_coproduct(g, order_), rules_), finv_, rules_));
  }

  const TwistCarrier& carrier() const { return carrier_; }
  int order() const { return order_; }
  const RewriteRuleset& rules() const { return rules_; }
  const TensorExpr& twist() const { return f_; }
  const TensorExpr& twist_inverse() const { return finv_; }

  /// Delta_xi(g) = F Delta_0(g) F^{-1}.
  const TensorExpr& coproduct(const Generator& g) const {
    auto it = coproducts_.find(g);
    if (it == coproducts_.end()) throw std::invalid_argument("not a Poincare generator: " + g.name());
    return it->second;
  }

  /// Multiplicative extension to a word (need not be canonical).
  TensorExpr coproduct(const Word& w) const {
    TensorExpr r = TensorExpr::identity(order_);
    for (const auto& g : w) r = tensor_mul(r, coproduct(g), rules_);
    return r;
  }

  TensorExpr coproduct(const NCExpr& e) const {
    TensorExpr r(order_);
    for (const auto& [w, c] : e.terms()) r += coproduct(w) * c;
    return r;
  }

 private:
  TwistCarrier carrier_;
  int order_;
  RewriteRuleset rules_;
  TensorExpr f_;
  TensorExpr finv_;
  std::map<Generator, TensorExpr> coproducts_;
};

inline TensorExpr twisted_coproduct(const Generator& g, const TwistCarrier& c, int order) {
  const RewriteRuleset rules = classical_rules(order);
  const TensorExpr f = twist_factor(c, order);
  return tensor_mul(tensor_mul(f, primitive_coproduct(g, order), rules), reflected(f), rules);
}

/// Counit: 1 on the empty word, 0 on any word containing M or P.
inline DeformSeries algebra_counit(const Word& w, int order) {
  return DeformSeries(order, w.empty() ? 1 : 0);
}

}  // namespace twistps
