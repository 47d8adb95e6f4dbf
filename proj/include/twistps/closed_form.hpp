#pragma once

#include "ncexpr.hpp"

#include <cmath>
#include <optional>
#include <string>

namespace twistps {

enum class Shape { Constant, Linear, Sin, Cos, Sinh, Cosh };

/// Closed-form value of a table entry.
///   Constant: prefactor * s^s_power
///   Linear:   prefactor * s^s_power * factor
///   Sin/Cos/Sinh/Cosh: prefactor * f(multiple * s * argument)
struct ClosedForm {
  Shape shape = Shape::Constant;
  Scalar prefactor;
  int s_power = 0;
  Generator factor;
  Generator argument;
  Rational multiple = 1;

  static ClosedForm constant(const Scalar& c, int s_power = 0) {
    ClosedForm f;
    f.prefactor = c;
    f.s_power = s_power;
    return f;
  }
  static ClosedForm linear(const Scalar& c, int s_power, const Generator& g) {
    ClosedForm f;
    f.shape = Shape::Linear;
    f.prefactor = c;
    f.s_power = s_power;
    f.factor = g;
    return f;
  }
  static ClosedForm trig(Shape shape, const Scalar& c, const Generator& arg, Rational multiple = 1) {
    ClosedForm f;
    f.shape = shape;
    f.prefactor = c;
    f.argument = arg;
    f.multiple = std::move(multiple);
    return f;
  }

  bool is_trig() const { return shape != Shape::Constant && shape != Shape::Linear; }
  /// Parity in s (cos/cosh even, sin/sinh odd); monomials by their s power.
  bool is_even() const {
    if (shape == Shape::Cos || shape == Shape::Cosh) return true;
    if (shape == Shape::Sin || shape == Shape::Sinh) return false;
    return s_power % 2 == 0;
  }

  friend bool operator==(const ClosedForm& a, const ClosedForm& b) {
    if (a.shape != b.shape || a.prefactor != b.prefactor) return false;
    if (a.shape == Shape::Constant) return a.prefactor.is_zero() || a.s_power == b.s_power;
    if (a.shape == Shape::Linear) return a.s_power == b.s_power && a.factor == b.factor;
    return a.argument == b.argument && a.multiple == b.multiple;
  }
};

inline const char* shape_name(Shape s) {
  switch (s) {
    case Shape::Constant: return "constant";
    case Shape::Linear: return "linear";
    case Shape::Sin: return "sin";
    case Shape::Cos: return "cos";
    case Shape::Sinh: return "sinh";
    case Shape::Cosh: return "cosh";
  }
  return "?";
}

/// Taylor expansion of the closed form as a truncated series.
inline NCExpr expand(const ClosedForm& f, int order) {
  NCExpr r(order);
  switch (f.shape) {
    case Shape::Constant:
      r.add_term({}, DeformSeries::monomial(order, f.s_power, f.prefactor));
      return r;
    case Shape::Linear:
      r.add_term({f.factor}, DeformSeries::monomial(order, f.s_power, f.prefactor));
      return r;
    default: break;
  }
  const bool even = f.shape == Shape::Cos || f.shape == Shape::Cosh;
  const bool alternating = f.shape == Shape::Cos || f.shape == Shape::Sin;
  Rational mpow = 1;
  for (int n = 0; n <= order; ++n) {
    if ((n % 2 == 0) == even) {
      const int k = n / 2;
      Rational c = mpow / factorial(static_cast<unsigned>(n));
      if (alternating && k % 2 == 1) c = -c;
      r.add_term(power_word(f.argument, n), DeformSeries::monomial(order, n, f.prefactor * Scalar(c)));
    }
    mpow *= f.multiple;
  }
  return r;
}

namespace detail {

inline std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

}  // namespace detail

/// Matches a series against the closed-form library. Words must be products of
/// commuting generators. Returns nullopt when nothing in the library reproduces
/// the input exactly to its order.
inline std::optional<ClosedForm> recognize_closed_form(const NCExpr& e) {
  const int order = e.order();
  if (e.is_zero()) return ClosedForm::constant(0);

  // single monomial: constant or linear
  if (e.size() == 1) {
    const auto& [w, c] = *e.terms().begin();
    int nonzero = 0, power = 0;
    for (int n = 0; n <= c.order(); ++n)
      if (!c[n].is_zero()) {
        ++nonzero;
        power = n;
      }
    if (nonzero == 1 && w.empty()) return ClosedForm::constant(c[power], power);
    if (nonzero == 1 && w.size() == 1) return ClosedForm::linear(c[power], power, w[0]);
  }

  // trig: the s^n coefficient must be a multiple of g^n for a single g
  std::optional<Generator> arg;
  for (const auto& [w, c] : e.terms()) {
    for (const auto& g : w) {
      if (arg && *arg != g) return std::nullopt;
      arg = g;
    }
  }
  if (!arg) return std::nullopt;
  auto a = [&](int n) { return e.coeff(power_word(*arg, n)).coeff(n); };

  std::optional<ClosedForm> candidate;
  const Scalar a0 = a(0), a1 = a(1);
  if (!a0.is_zero() && order >= 2) {
    Scalar ratio = a(2) / a0;  // -m^2/2 for cos, +m^2/2 for cosh
    if (ratio.is_real() && sgn(ratio.re()) != 0) {
      Rational m2 = 2 * ratio.re();
      const bool hyperbolic = sgn(m2) > 0;
      if (!hyperbolic) m2 = -m2;
      if (auto m = detail::rational_sqrt(m2))
        candidate = ClosedForm::trig(hyperbolic ? Shape::Cosh : Shape::Cos, a0, *arg, *m);
    }
  } else if (a0.is_zero() && !a1.is_zero() && order >= 3) {
    Scalar ratio = a(3) / a1;  // -m^2/6 for sin, +m^2/6 for sinh
    if (ratio.is_real() && sgn(ratio.re()) != 0) {
      Rational m2 = 6 * ratio.re();
      const bool hyperbolic = sgn(m2) > 0;
      if (!hyperbolic) m2 = -m2;
      if (auto m = detail::rational_sqrt(m2))
        candidate = ClosedForm::trig(hyperbolic ? Shape::Sinh : Shape::Sin, a1 / Scalar(*m), *arg, *m);
    }
  }
  if (candidate && expand(*candidate, order) == e) return candidate;
  return std::nullopt;
}

namespace detail {

inline std::string coeff_text(const Scalar& c) {
  std::string s = c.str();
  if (!c.is_real() && sgn(c.re()) != 0) return "(" + s + ")";
  if (c.is_real() || s == "i" || s == "-i") return s;
  return "(" + s + ")";
}

/// "x" prefixed by a coefficient: 1 -> "x", -1 -> "-x", i -> "i*x", 1/2 -> "1/2*x".
inline std::string times(const Scalar& c, const std::string& x) {
  if (c == Scalar(1)) return x;
  if (c == Scalar(-1)) return "-" + x;
  return coeff_text(c) + "*" + x;
}

}  // namespace detail

/// Plain-text rendering in terms of s = 1/(2 xi), e.g. "-i*cosh(s*p_2)", "2*i*s*x_2".
inline std::string to_text(const ClosedForm& f) {
  auto spow = [](int k) -> std::string {
    if (k == 0) return "";
    if (k == 1) return "s";
    return "s^" + std::to_string(k);
  };
  switch (f.shape) {
    case Shape::Constant: {
      if (f.prefactor.is_zero()) return "0";
      if (f.s_power == 0) return f.prefactor.str();
      return detail::times(f.prefactor, spow(f.s_power));
    }
    case Shape::Linear: {
      std::string tail = f.s_power ? spow(f.s_power) + "*" + f.factor.display() : f.factor.display();
      return detail::times(f.prefactor, tail);
    }
    default: break;
  }
  std::string arg = (f.multiple == 1 ? std::string() : f.multiple.get_str() + "*") + "s*" +
                    f.argument.display();
  return detail::times(f.prefactor, std::string(shape_name(f.shape)) + "(" + arg + ")");
}

/// LaTeX rendering with the deformation parameter shown explicitly,
/// e.g. "(i/\xi) x_2", "-i\cosh(p_2/2\xi)". `param` is the LaTeX of xi.
inline std::string to_latex(const ClosedForm& f, const std::string& param = "\\xi") {
  // coefficient c * s^k = c / (2^k xi^k)
  auto coeff = [&](const Scalar& c, int k, bool bare_unit) -> std::string {
    Rational q;
    std::string unit;
    std::string sign;
    if (c.is_real()) {
      q = abs(c.re());
      if (sgn(c.re()) < 0) sign = "-";
    } else if (sgn(c.re()) == 0) {
      q = abs(c.im());
      unit = "i";
      if (sgn(c.im()) < 0) sign = "-";
    } else {
      return "(" + c.str() + ")" + (k ? "/(" + std::to_string(1 << k) + param + ")" : "");
    }
    Rational scaled = q / Rational(mpz_class(1) << k);
    scaled.canonicalize();
    std::string num = scaled.get_num() == 1 ? (unit.empty() ? "1" : unit)
                                             : scaled.get_num().get_str() + unit;
    std::string den = scaled.get_den() == 1 ? "" : scaled.get_den().get_str();
    if (k == 1) den += param;
    if (k > 1) den += param + "^{" + std::to_string(k) + "}";
    if (den.empty()) {
      if (bare_unit && num == "1") return sign;
      return sign + num;
    }
    return sign + "(" + num + "/" + den + ")";
  };
  switch (f.shape) {
    case Shape::Constant: return f.prefactor.is_zero() ? "0" : coeff(f.prefactor, f.s_power, false);
    case Shape::Linear: return coeff(f.prefactor, f.s_power, true) + " " + f.factor.latex();
    default: break;
  }
  // m * s * p = m p / (2 xi)
  Rational half = f.multiple / 2;
  half.canonicalize();
  std::string num = (half.get_num() == 1 ? "" : half.get_num().get_str()) + f.argument.latex();
  std::string den = (half.get_den() == 1 ? "" : half.get_den().get_str()) + param;
  return coeff(f.prefactor, 0, true) + "\\" + shape_name(f.shape) + "(" + num + "/" + den + ")";
}

/// Numeric value at momentum values `p` (indexed by argument/factor lookups) and s.
template <class Lookup>
double evaluate(const ClosedForm& f, double s, Lookup&& value_of) {
  // prefactors in the table are real or purely imaginary; the caller strips the phase
  const double x = f.multiple.get_d() * s;
  switch (f.shape) {
    case Shape::Constant: return std::pow(s, f.s_power);
    case Shape::Linear: return std::pow(s, f.s_power) * value_of(f.factor);
    case Shape::Sin: return std::sin(x * value_of(f.argument));
    case Shape::Cos: return std::cos(x * value_of(f.argument));
    case Shape::Sinh: return std::sinh(x * value_of(f.argument));
    case Shape::Cosh: return std::cosh(x * value_of(f.argument));
  }
  return 0.0;
}

}  // namespace twistps
