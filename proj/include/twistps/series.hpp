#pragma once

#include "scalar.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace twistps {

/// Truncated power series sum_{n<=order} c_n s^n with s = 1/(2 xi).
class DeformSeries {
 public:
  DeformSeries() = default;
  explicit DeformSeries(int order) : coeffs_(static_cast<size_t>(order) + 1) {}
  DeformSeries(int order, const Scalar& constant) : coeffs_(static_cast<size_t>(order) + 1) {
    coeffs_[0] = constant;
  }

  /// c * s^power, or zero when power exceeds order.
  static DeformSeries monomial(int order, int power, const Scalar& c) {
    DeformSeries r(order);
    if (power >= 0 && power <= order) r.coeffs_[static_cast<size_t>(power)] = c;
    return r;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Scalar& operator[](int n) const { return coeffs_[static_cast<size_t>(n)]; }
  Scalar& operator[](int n) { return coeffs_[static_cast<size_t>(n)]; }
  Scalar coeff(int n) const { return n >= 0 && n <= order() ? (*this)[n] : Scalar(); }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c.is_zero(); });
  }
  /// Lowest power with a nonzero coefficient, -1 for the zero series.
  int valuation() const {
    for (int n = 0; n <= order(); ++n)
      if (!(*this)[n].is_zero()) return n;
    return -1;
  }

  DeformSeries truncated(int order) const {
    DeformSeries r(std::min(order, this->order()));
    for (int n = 0; n <= r.order(); ++n) r[n] = (*this)[n];
    return r;
  }

  /// s -> -s
  DeformSeries reflected() const {
    DeformSeries r = *this;
    for (int n = 1; n <= order(); n += 2) r[n] = -r[n];
    return r;
  }

  DeformSeries operator-() const {
    DeformSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  DeformSeries& operator+=(const DeformSeries& o) {
    if (o.order() < order()) coeffs_.resize(o.coeffs_.size());
    for (int n = 0; n <= order(); ++n) (*this)[n] += o[n];
    return *this;
  }
  DeformSeries& operator-=(const DeformSeries& o) {
    if (o.order() < order()) coeffs_.resize(o.coeffs_.size());
    for (int n = 0; n <= order(); ++n) (*this)[n] -= o[n];
    return *this;
  }
  DeformSeries& operator*=(const Scalar& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
  }

  friend DeformSeries operator+(DeformSeries a, const DeformSeries& b) { return a += b; }
  friend DeformSeries operator-(DeformSeries a, const DeformSeries& b) { return a -= b; }
  friend DeformSeries operator*(DeformSeries a, const Scalar& c) { return a *= c; }
  friend DeformSeries operator*(const Scalar& c, DeformSeries a) { return a *= c; }

  friend DeformSeries operator*(const DeformSeries& a, const DeformSeries& b) {
    const int n = std::min(a.order(), b.order());
    DeformSeries r(n);
    for (int i = 0; i <= n; ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; i + j <= n; ++j) {
        if (b[j].is_zero()) continue;
        r[i + j] += a[i] * b[j];
      }
    }
    return r;
  }

  /// Coefficient-wise equality after truncating both to the smaller order.
  friend bool operator==(const DeformSeries& a, const DeformSeries& b) {
    const int n = std::min(a.order(), b.order());
    for (int i = 0; i <= n; ++i)
      if (a[i] != b[i]) return false;
    return true;
  }
  friend bool operator!=(const DeformSeries& a, const DeformSeries& b) { return !(a == b); }

  std::string str() const {
    std::string out;
    for (int n = 0; n <= order(); ++n) {
      if ((*this)[n].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + (*this)[n].str() + ")";
      if (n > 0) out += "*s^" + std::to_string(n);
    }
    return out.empty() ? "0" : out;
  }

 private:
  std::vector<Scalar> coeffs_{Scalar()};
};

}  // namespace twistps
