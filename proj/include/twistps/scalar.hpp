#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <sstream>
#include <string>
#include <utility>

namespace twistps {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// "3", "-1/2"; throws std::invalid_argument on malformed input.
inline Rational parse_rational(const std::string& text) {
  Rational r(text, 10);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in " + text);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Exact Gaussian rational re + i*im.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long re) : re_(re) {}  // NOLINT: implicit from integers is intended
  Scalar(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar i() { return Scalar(0, 1); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  Rational norm2() const { return re_ * re_ + im_ * im_; }

  Scalar operator-() const { return Scalar(-re_, -im_); }

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Human-readable form: "0", "-i", "1/2", "3-2*i", "-1/6*i".
  std::string str() const;

  double real_double() const { return re_.get_d(); }
  double imag_double() const { return im_.get_d(); }

 private:
  Rational re_ = 0;
  Rational im_ = 0;
};

inline Scalar& Scalar::operator/=(const Scalar& o) {
  Rational d = o.norm2();
  if (sgn(d) == 0) throw std::domain_error("Scalar division by zero");
  *this *= o.conj();
  re_ /= d;
  im_ /= d;
  return *this;
}

inline std::string Scalar::str() const {
  auto imag_part = [](const Rational& v) -> std::string {
    if (v == 1) return "i";
    if (v == -1) return "-i";
    return v.get_str() + "*i";
  };
  if (is_zero()) return "0";
  if (sgn(im_) == 0) return re_.get_str();
  if (sgn(re_) == 0) return imag_part(im_);
  std::string im = imag_part(im_);
  if (im[0] != '-') im = "+" + im;
  return re_.get_str() + im;
}

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

/// i^n for integer n (n may be negative).
inline Scalar i_pow(int n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return Scalar(1);
    case 1: return Scalar::i();
    case 2: return Scalar(-1);
    default: return -Scalar::i();
  }
}

inline Rational factorial(unsigned n) {
  mpz_class f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return Rational(f);
}

}  // namespace twistps
