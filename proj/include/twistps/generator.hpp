#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace twistps {

/// Generator families. The enumerator order is the canonical (PBW) order:
/// algebra side M < P, group side Lambda < a, position before momentum.
enum class Kind : std::uint8_t { M, P, Lambda, A, X, T, Y, Mom, Pi };

/// A single noncommutative generator with up to two spacetime indices in 0..3.
/// M_{mu nu} is stored with mu < nu; Lambda carries (upper, lower).
struct Generator {
  Kind kind = Kind::P;
  std::int8_t i = -1;
  std::int8_t j = -1;

  friend auto operator<=>(const Generator&, const Generator&) = default;

  static Generator P(int mu) { return {Kind::P, static_cast<std::int8_t>(mu), -1}; }
  static Generator Lambda(int up, int down) {
    return {Kind::Lambda, static_cast<std::int8_t>(up), static_cast<std::int8_t>(down)};
  }
  static Generator a(int mu) { return {Kind::A, static_cast<std::int8_t>(mu), -1}; }
  static Generator x(int mu) { return {Kind::X, static_cast<std::int8_t>(mu), -1}; }
  static Generator p(int mu) { return {Kind::Mom, static_cast<std::int8_t>(mu), -1}; }
  static Generator t() { return {Kind::T, -1, -1}; }
  static Generator y(int k) { return {Kind::Y, static_cast<std::int8_t>(k), -1}; }
  static Generator pi(int mu) { return {Kind::Pi, static_cast<std::int8_t>(mu), -1}; }
  /// Requires mu < nu; use M() in ncexpr.hpp for the signed antisymmetric form.
  static Generator M_ordered(int mu, int nu) {
    if (!(mu < nu)) throw std::invalid_argument("M_ordered requires mu < nu");
    return {Kind::M, static_cast<std::int8_t>(mu), static_cast<std::int8_t>(nu)};
  }

  bool is_algebra_side() const { return kind == Kind::M || kind == Kind::P; }
  bool is_group_side() const { return kind == Kind::Lambda || kind == Kind::A; }
  bool is_momentum() const { return kind == Kind::Mom || kind == Kind::Pi || kind == Kind::P; }

  /// Compact ASCII name: M12, P0, L1_2, a3, x0, t, y1, p2, pi0.
  std::string name() const {
    auto d = [](int v) { return std::to_string(v); };
    switch (kind) {
      case Kind::M: return "M" + d(i) + d(j);
      case Kind::P: return "P" + d(i);
      case Kind::Lambda: return "L" + d(i) + "_" + d(j);
      case Kind::A: return "a" + d(i);
      case Kind::X: return "x" + d(i);
      case Kind::T: return "t";
      case Kind::Y: return "y" + d(i);
      case Kind::Mom: return "p" + d(i);
      case Kind::Pi: return "pi" + d(i);
    }
    return "?";
  }

  /// LaTeX symbol: M_{12}, \Lambda^{1}_{\ 2}, x_1, \pi_0, ...
  std::string latex() const {
    auto d = [](int v) { return std::to_string(v); };
    switch (kind) {
      case Kind::M: return "M_{" + d(i) + d(j) + "}";
      case Kind::P: return "P_{" + d(i) + "}";
      case Kind::Lambda: return "\\Lambda^{" + d(i) + "}_{\\ " + d(j) + "}";
      case Kind::A: return "a^{" + d(i) + "}";
      case Kind::X: return "x_" + d(i);
      case Kind::T: return "t";
      case Kind::Y: return "y_" + d(i);
      case Kind::Mom: return "p_" + d(i);
      case Kind::Pi: return "\\pi_" + d(i);
    }
    return "?";
  }

  /// Display form with an underscore before indices: x_1, p_2, pi_0, M_12, a^1, L^1_2.
  std::string display() const {
    auto d = [](int v) { return std::to_string(v); };
    switch (kind) {
      case Kind::M: return "M_" + d(i) + d(j);
      case Kind::P: return "P_" + d(i);
      case Kind::Lambda: return "L^" + d(i) + "_" + d(j);
      case Kind::A: return "a^" + d(i);
      case Kind::X: return "x_" + d(i);
      case Kind::T: return "t";
      case Kind::Y: return "y_" + d(i);
      case Kind::Mom: return "p_" + d(i);
      case Kind::Pi: return "pi_" + d(i);
    }
    return "?";
  }

  static std::optional<Generator> parse(std::string_view s);
};

inline std::optional<Generator> Generator::parse(std::string_view s) {
  auto digit = [](char c) -> int { return c >= '0' && c <= '3' ? c - '0' : -1; };
  if (s == "t") return t();
  if (s.size() == 3 && s.substr(0, 2) == "pi" && digit(s[2]) >= 0) return pi(digit(s[2]));
  if (s.size() == 2 && digit(s[1]) >= 0) {
    const int mu = digit(s[1]);
    switch (s[0]) {
      case 'P': return P(mu);
      case 'a': return a(mu);
      case 'x': return x(mu);
      case 'p': return p(mu);
      case 'y': return mu > 0 ? std::optional(y(mu)) : std::nullopt;
      default: return std::nullopt;
    }
  }
  if (s.size() == 3 && s[0] == 'M' && digit(s[1]) >= 0 && digit(s[2]) >= 0 && s[1] < s[2])
    return M_ordered(digit(s[1]), digit(s[2]));
  if (s.size() == 4 && s[0] == 'L' && s[2] == '_' && digit(s[1]) >= 0 && digit(s[3]) >= 0)
    return Lambda(digit(s[1]), digit(s[3]));
  return std::nullopt;
}

using Word = std::vector<Generator>;

inline bool is_canonical(const Word& w) {
  for (size_t n = 1; n < w.size(); ++n)
    if (w[n] < w[n - 1]) return false;
  return true;
}

inline std::string word_name(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (size_t n = 0; n < w.size(); ++n) {
    if (n) out += "*";
    out += w[n].name();
  }
  return out;
}

}  // namespace twistps
