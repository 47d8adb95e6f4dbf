#pragma once

#include "ncexpr.hpp"

#include <array>
#include <functional>
#include <map>
#include <string>
#include <utility>

namespace twistps {

/// Sum of K-fold tensor products of words with series coefficients,
/// sum c * (w_1 (x) ... (x) w_K). Scalars move freely between legs, so the
/// coefficient is kept on the term rather than on a leg.
template <std::size_t K>
class Tensor {
 public:
  using Key = std::array<Word, K>;
  using TermMap = std::map<Key, DeformSeries>;

  explicit Tensor(int order = 0) : order_(order) {}

  static Tensor identity(int order) {
    Tensor t(order);
    t.add_term(Key{}, DeformSeries(order, 1));
    return t;
  }

  /// Tensor product of expressions, one per leg.
  static Tensor product(const std::array<NCExpr, K>& legs) {
    int order = legs[0].order();
    for (const auto& l : legs) order = std::min(order, l.order());
    Tensor t = identity(order);
    for (std::size_t leg = 0; leg < K; ++leg) {
      Tensor next(order);
      for (const auto& [key, c] : t.terms_)
        for (const auto& [w, lc] : legs[leg].terms()) {
          Key k = key;
          k[leg] = w;
          next.add_term(k, c * lc.truncated(order));
        }
      t = std::move(next);
    }
    return t;
  }

  int order() const { return order_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Key& k, const DeformSeries& c) {
    DeformSeries t = c.truncated(order_);
    if (t.order() < order_) throw std::logic_error("Tensor: coefficient order below tensor order");
    if (t.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, std::move(t));
      return;
    }
    it->second += t;
    if (it->second.is_zero()) terms_.erase(it);
  }

  Tensor truncated(int order) const {
    Tensor r(std::min(order, order_));
    for (const auto& [k, c] : terms_) r.add_term(k, c);
    return r;
  }

  Tensor operator-() const {
    Tensor r(order_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
  }
  Tensor& operator+=(const Tensor& o) {
    if (o.order_ < order_) *this = truncated(o.order_);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  Tensor& operator-=(const Tensor& o) { return *this += -o; }
  Tensor& operator*=(const DeformSeries& s) {
    Tensor r(order_);
    for (const auto& [k, c] : terms_) r.add_term(k, c * s);
    return *this = std::move(r);
  }
  Tensor& operator*=(const Scalar& s) { return *this *= DeformSeries(order_, s); }

  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(Tensor a, const DeformSeries& s) { return a *= s; }
  friend Tensor operator*(Tensor a, const Scalar& s) { return a *= s; }
  friend Tensor operator*(const Scalar& s, Tensor a) { return a *= s; }

  friend bool operator==(const Tensor& a, const Tensor& b) {
    const int n = std::min(a.order_, b.order_);
    return (a.truncated(n) - b.truncated(n)).is_zero();
  }
  friend bool operator!=(const Tensor& a, const Tensor& b) { return !(a == b); }

  /// Expression on leg `leg` obtained by contracting the other legs with `f`,
  /// where f maps (leg index, word) to a series.
  NCExpr contract_except(std::size_t leg,
                         const std::function<DeformSeries(std::size_t, const Word&)>& f) const {
    NCExpr r(order_);
    for (const auto& [k, c] : terms_) {
      DeformSeries coeff = c;
      for (std::size_t l = 0; l < K && !coeff.is_zero(); ++l)
        if (l != leg) coeff = coeff * f(l, k[l]);
      r.add_term(k[leg], coeff);
    }
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "[" + c.str() + "]*";
      for (std::size_t l = 0; l < K; ++l) {
        if (l) out += " (x) ";
        out += word_name(k[l]);
      }
    }
    return out;
  }

 private:
  int order_;
  TermMap terms_;
};

using TensorExpr = Tensor<2>;

inline TensorExpr tensor(const NCExpr& a, const NCExpr& b) { return TensorExpr::product({a, b}); }

/// a (x) b - b (x) a
inline TensorExpr wedge(const NCExpr& a, const NCExpr& b) { return tensor(a, b) - tensor(b, a); }

/// a (x) b + b (x) a
inline TensorExpr perp(const NCExpr& a, const NCExpr& b) { return tensor(a, b) + tensor(b, a); }

/// Legwise product (A1 (x) ... )(B1 (x) ...) = A1 B1 (x) ..., each leg normal-ordered.
template <std::size_t K>
Tensor<K> tensor_mul(const Tensor<K>& x, const Tensor<K>& y, const RewriteRuleset& rules) {
  const int order = std::min(x.order(), y.order());
  std::map<std::pair<Word, Word>, NCExpr> cache;
  auto leg_product = [&](const Word& a, const Word& b) -> const NCExpr& {
    auto key = std::make_pair(a, b);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    NCExpr e = normal_order(NCExpr::word(order, w, DeformSeries(order, 1)), rules);
    return cache.emplace(std::move(key), std::move(e)).first->second;
  };
  Tensor<K> out(order);
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) {
      DeformSeries c = cx * cy;
      if (c.is_zero()) continue;
      // expand the legwise products one leg at a time
      std::map<typename Tensor<K>::Key, DeformSeries> partial;
      partial.emplace(typename Tensor<K>::Key{}, c);
      for (std::size_t leg = 0; leg < K; ++leg) {
        const NCExpr& prod = leg_product(kx[leg], ky[leg]);
        std::map<typename Tensor<K>::Key, DeformSeries> next;
        for (const auto& [key, pc] : partial)
          for (const auto& [w, wc] : prod.terms()) {
            DeformSeries nc = pc * wc;
            if (nc.is_zero()) continue;
            auto k = key;
            k[leg] = w;
            auto [it, ins] = next.try_emplace(k, nc);
            if (!ins) it->second += nc;
          }
        partial = std::move(next);
      }
      for (const auto& [key, pc] : partial) out.add_term(key, pc);
    }
  return out;
}

/// Applies a linear map to one leg of a K-tensor, producing a (K+1)-tensor
/// where the image (a 2-tensor) occupies legs `leg` and `leg + 1`.
template <std::size_t K>
Tensor<K + 1> apply_on_leg(const Tensor<K>& t, std::size_t leg,
                           const std::function<TensorExpr(const Word&)>& map) {
  Tensor<K + 1> out(t.order());
  std::map<Word, TensorExpr> cache;
  for (const auto& [k, c] : t.terms()) {
    auto it = cache.find(k[leg]);
    if (it == cache.end()) it = cache.emplace(k[leg], map(k[leg])).first;
    for (const auto& [pk, pc] : it->second.terms()) {
      typename Tensor<K + 1>::Key nk;
      for (std::size_t l = 0, m = 0; l < K; ++l) {
        if (l == leg) {
          nk[m++] = pk[0];
          nk[m++] = pk[1];
        } else {
          nk[m++] = k[l];
        }
      }
      out.add_term(nk, c * pc);
    }
  }
  return out;
}

/// Embeds a K-tensor into K+1 legs by inserting the unit word at position `pos`.
template <std::size_t K>
Tensor<K + 1> insert_unit(const Tensor<K>& t, std::size_t pos) {
  Tensor<K + 1> out(t.order());
  for (const auto& [k, c] : t.terms()) {
    typename Tensor<K + 1>::Key nk;
    for (std::size_t l = 0, m = 0; l <= K; ++l) {
      if (l == pos)
        nk[l] = Word{};
      else
        nk[l] = k[m++];
    }
    out.add_term(nk, c);
  }
  return out;
}

}  // namespace twistps
