#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gwh {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "a", "-a/b" (surrounding whitespace not allowed). Throws ValidationError.
Rational parse_rational(std::string_view text);

/// Canonical "num/den" text, or "num" when the denominator is 1.
std::string to_string(const Rational& q);

Integer factorial(unsigned n);

/// Element of Q(i) with exact rational parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational imaginary_unit() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  GaussianRational inverse() const;
  /// Integer power; negative exponents invert. 0^0 = 1.
  GaussianRational pow(long k) const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  /// Human-readable form, e.g. "1/2", "-i", "3/4-1/2*i".
  std::string to_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Parses "1", "-1", "i", "-i", or "a/b+c/d*i"-style text produced by to_string().
GaussianRational parse_gaussian(std::string_view text);

}  // namespace gwh
