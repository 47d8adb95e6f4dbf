#pragma once

#include "generator.hpp"
#include "series.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace twistps {

class RewriteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Noncommutative polynomial: sum over words of DeformSeries coefficients.
/// Zero coefficients are never stored. Every series shares the same order.
class NCExpr {
 public:
  using TermMap = std::map<Word, DeformSeries>;

  explicit NCExpr(int order = 0) : order_(order) {}

  static NCExpr constant(int order, const Scalar& c) {
    NCExpr e(order);
    e.add_term({}, DeformSeries(order, c));
    return e;
  }
  static NCExpr generator(int order, const Generator& g, const Scalar& c = 1) {
    NCExpr e(order);
    e.add_term({g}, DeformSeries(order, c));
    return e;
  }
  static NCExpr word(int order, Word w, const DeformSeries& c) {
    NCExpr e(order);
    e.add_term(std::move(w), c);
    return e;
  }

  int order() const { return order_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  /// Accumulates c * w; prunes the entry if it cancels.
  void add_term(const Word& w, const DeformSeries& c) {
    DeformSeries t = c.order() == order_ ? c : c.truncated(order_);
    if (t.order() < order_) throw std::logic_error("NCExpr: coefficient order below expression order");
    if (t.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(w, std::move(t));
      return;
    }
    it->second += t;
    if (it->second.is_zero()) terms_.erase(it);
  }

  DeformSeries coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? DeformSeries(order_) : it->second;
  }

  NCExpr truncated(int order) const {
    NCExpr r(std::min(order, order_));
    for (const auto& [w, c] : terms_) r.add_term(w, c.truncated(r.order_));
    return r;
  }

  /// s -> -s on every coefficient.
  NCExpr reflected() const {
    NCExpr r(order_);
    for (const auto& [w, c] : terms_) r.add_term(w, c.reflected());
    return r;
  }

  bool is_normal_ordered() const {
    for (const auto& [w, c] : terms_)
      if (!is_canonical(w)) return false;
    return true;
  }

  NCExpr operator-() const {
    NCExpr r(order_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
  }
  NCExpr& operator+=(const NCExpr& o) {
    if (o.order_ < order_) *this = truncated(o.order_);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  NCExpr& operator-=(const NCExpr& o) { return *this += -o; }
  NCExpr& operator*=(const DeformSeries& c) {
    NCExpr r(order_);
    for (const auto& [w, v] : terms_) r.add_term(w, v * c);
    return *this = std::move(r);
  }
  NCExpr& operator*=(const Scalar& c) { return *this *= DeformSeries(order_, c); }

  friend NCExpr operator+(NCExpr a, const NCExpr& b) { return a += b; }
  friend NCExpr operator-(NCExpr a, const NCExpr& b) { return a -= b; }
  friend NCExpr operator*(NCExpr a, const Scalar& c) { return a *= c; }
  friend NCExpr operator*(const Scalar& c, NCExpr a) { return a *= c; }
  friend NCExpr operator*(NCExpr a, const DeformSeries& c) { return a *= c; }
  friend NCExpr operator*(const DeformSeries& c, NCExpr a) { return a *= c; }

  /// Exact coefficient-wise equality at the smaller of the two orders.
  friend bool operator==(const NCExpr& a, const NCExpr& b) {
    const int n = std::min(a.order_, b.order_);
    return (a.truncated(n) - b.truncated(n)).is_zero();
  }
  friend bool operator!=(const NCExpr& a, const NCExpr& b) { return !(a == b); }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "[" + c.str() + "]";
      if (!w.empty()) out += "*" + word_name(w);
    }
    return out;
  }

 private:
  int order_;
  TermMap terms_;
};

/// Unordered concatenation product; the result is generally not canonical.
inline NCExpr concat(const NCExpr& a, const NCExpr& b) {
  NCExpr r(std::min(a.order(), b.order()));
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(w, ca * cb);
    }
  return r;
}

/// Signed antisymmetric M_{mu nu}: M_{nu mu} = -M_{mu nu}, M_{mu mu} = 0.
inline NCExpr M(int order, int mu, int nu) {
  if (mu == nu) return NCExpr(order);
  if (mu < nu) return NCExpr::generator(order, Generator::M_ordered(mu, nu));
  return NCExpr::generator(order, Generator::M_ordered(nu, mu), -1);
}

/// Ordered-pair rewrite rules: for g1 > g2, g1 g2 -> g2 g1 + rhs, i.e. rhs = [g1, g2].
/// Pairs without a rule commute.
class RewriteRuleset {
 public:
  explicit RewriteRuleset(std::size_t step_budget = 20'000'000) : budget_(step_budget) {}

  /// Registers [a, b] = value for either ordering of a and b.
  void set_commutator(const Generator& a, const Generator& b, const NCExpr& value) {
    if (a == b) {
      if (!value.is_zero()) throw std::invalid_argument("[g, g] must vanish");
      return;
    }
    if (a > b)
      put(a, b, value);
    else
      put(b, a, -value);
  }

  /// [a, b] as registered (zero when the pair commutes).
  NCExpr bracket(const Generator& a, const Generator& b, int order) const {
    if (a == b) return NCExpr(order);
    if (a > b) {
      auto it = rules_.find({a, b});
      return it == rules_.end() ? NCExpr(order) : it->second.truncated(order);
    }
    return -bracket(b, a, order);
  }

  const NCExpr* rule(const Generator& hi, const Generator& lo) const {
    auto it = rules_.find({hi, lo});
    return it == rules_.end() ? nullptr : &it->second;
  }

  const std::map<std::pair<Generator, Generator>, NCExpr>& rules() const { return rules_; }
  std::size_t step_budget() const { return budget_; }

 private:
  void put(const Generator& hi, const Generator& lo, const NCExpr& value) {
    if (value.is_zero())
      rules_.erase({hi, lo});
    else
      rules_.insert_or_assign({hi, lo}, value);
  }

  std::map<std::pair<Generator, Generator>, NCExpr> rules_;
  std::size_t budget_;
};

/// Rewrites every word into canonical order. Throws RewriteError when the
/// step budget runs out.
inline NCExpr normal_order(const NCExpr& e, const RewriteRuleset& rules) {
  const int order = e.order();
  NCExpr done(order);
  NCExpr::TermMap pending;
  auto push = [&](Word w, const DeformSeries& c) {
    if (c.is_zero()) return;
    auto it = pending.find(w);
    if (it == pending.end()) {
      pending.emplace(std::move(w), c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) pending.erase(it);
  };
  for (const auto& [w, c] : e.terms()) push(w, c);

  std::size_t steps = 0;
  while (!pending.empty()) {
    auto node = pending.extract(std::prev(pending.end()));
    const Word& w = node.key();
    const DeformSeries& c = node.mapped();
    size_t pos = 0;
    while (pos + 1 < w.size() && !(w[pos + 1] < w[pos])) ++pos;
    if (pos + 1 >= w.size()) {
      done.add_term(w, c);
      continue;
    }
    if (++steps > rules.step_budget()) throw RewriteError("rewrite budget exceeded");
    Word swapped = w;
    std::swap(swapped[pos], swapped[pos + 1]);
    if (const NCExpr* rhs = rules.rule(w[pos], w[pos + 1])) {
      for (const auto& [rw, rc] : rhs->terms()) {
        DeformSeries nc = c * rc;
        if (nc.is_zero()) continue;
        Word nw(w.begin(), w.begin() + static_cast<long>(pos));
        nw.insert(nw.end(), rw.begin(), rw.end());
        nw.insert(nw.end(), w.begin() + static_cast<long>(pos) + 2, w.end());
        push(std::move(nw), nc);
      }
    }
    push(std::move(swapped), c);
  }
  return done;
}

inline NCExpr mul(const NCExpr& a, const NCExpr& b, const RewriteRuleset& rules) {
  return normal_order(concat(a, b), rules);
}

inline NCExpr commutator(const NCExpr& a, const NCExpr& b, const RewriteRuleset& rules) {
  return normal_order(concat(a, b) - concat(b, a), rules);
}

/// Polynomial in formal c: exponent -> expression. Used only by contraction.
using CGraded = std::map<int, NCExpr>;

/// Target of a generator substitution g -> scale * c^c_power * target.
struct ScaledGenerator {
  Scalar scale = 1;
  int c_power = 0;
  Generator target;
};

using SubstitutionMap = std::map<Generator, ScaledGenerator>;

/// Generator-wise substitution. Unmapped generators are kept. Each power s^n of
/// the coefficient additionally contributes c^(n * c_per_s), which encodes the
/// deformation-parameter rescaling. The result is graded by the power of c.
inline CGraded substitute(const NCExpr& e, const SubstitutionMap& map, int c_per_s = 0) {
  CGraded out;
  for (const auto& [w, c] : e.terms()) {
    Word nw;
    Scalar scale = 1;
    int cpow = 0;
    for (const auto& g : w) {
      auto it = map.find(g);
      if (it == map.end()) {
        nw.push_back(g);
        continue;
      }
      nw.push_back(it->second.target);
      scale *= it->second.scale;
      cpow += it->second.c_power;
    }
    for (int n = 0; n <= c.order(); ++n) {
      if (c[n].is_zero()) continue;
      const int grade = cpow + n * c_per_s;
      auto [slot, inserted] = out.try_emplace(grade, e.order());
      slot->second.add_term(nw, DeformSeries::monomial(e.order(), n, c[n] * scale));
      (void)inserted;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.is_zero())
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

/// Substitution without c-grading; the map must not carry c powers.
inline NCExpr substitute_plain(const NCExpr& e, const SubstitutionMap& map) {
  NCExpr r(e.order());
  for (const auto& [grade, part] : substitute(e, map)) {
    if (grade != 0) throw std::invalid_argument("substitute_plain: map carries powers of c");
    r += part;
  }
  return r;
}

/// d/dg on an expression whose words are products of mutually commuting generators.
inline NCExpr partial_derivative(const NCExpr& e, const Generator& g) {
  NCExpr r(e.order());
  for (const auto& [w, c] : e.terms()) {
    long count = 0;
    Word rest;
    for (const auto& h : w) {
      if (h == g && count == 0) {
        ++count;
        continue;
      }
      if (h == g) ++count;
      rest.push_back(h);
    }
    if (count > 0) r.add_term(rest, c * Scalar(count));
  }
  return r;
}

/// Power of a commuting generator, g^n.
inline Word power_word(const Generator& g, int n) { return Word(static_cast<size_t>(n), g); }

}  // namespace twistps
