#include "gwh/rational.hpp"

#include <cctype>

#include "gwh/errors.hpp"
#include "gwh/exec.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gwh {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw ValidationError("empty rational");
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') i = 1;
  bool seen_digit = false;
  bool seen_slash = false;
  bool digit_after_slash = false;
  for (std::size_t k = i; k < text.size(); ++k) {
    char c = text[k];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      seen_digit = true;
      if (seen_slash) digit_after_slash = true;
    } else if (c == '/' && !seen_slash && seen_digit) {
      seen_slash = true;
    } else {
      throw ValidationError("malformed rational: '" + std::string(text) + "'");
    }
  }
  if (!seen_digit || (seen_slash && !digit_after_slash)) {
    throw ValidationError("malformed rational: '" + std::string(text) + "'");
  }
  std::string s(text[0] == '+' ? text.substr(1) : text);
  Rational q;
  q.set_str(s, 10);
  if (sgn(q.get_den()) == 0) throw ValidationError("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

GaussianRational GaussianRational::inverse() const {
  Rational norm = re_ * re_ + im_ * im_;
  if (sgn(norm) == 0) throw std::domain_error("division by zero in Q(i)");
  return {re_ / norm, -im_ / norm};
}

GaussianRational GaussianRational::pow(long k) const {
  GaussianRational base = k < 0 ? inverse() : *this;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  GaussianRational acc(1);
  while (e != 0) {
    if (e & 1UL) acc *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return acc;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (o.is_real()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_real()) {
    if (sgn(o.re_) == 0) throw std::domain_error("division by zero in Q(i)");
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return gwh::to_string(re_);
  std::string im_part;
  if (im_ == 1) {
    im_part = "i";
  } else if (im_ == -1) {
    im_part = "-i";
  } else {
    im_part = gwh::to_string(im_) + "*i";
  }
  if (sgn(re_) == 0) return im_part;
  return gwh::to_string(re_) + (sgn(im_) > 0 ? "+" : "") + im_part;
}

GaussianRational parse_gaussian(std::string_view text) {
  if (text.empty()) throw ValidationError("empty Gaussian rational");
  if (text.back() != 'i') return {parse_rational(text)};
  std::string_view body = text.substr(0, text.size() - 1);
  if (!body.empty() && body.back() == '*') body.remove_suffix(1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  auto imag_of = [&](std::string_view s) -> Rational {
    if (s.empty() || s == "+") return 1;
    if (s == "-") return -1;
    return parse_rational(s);
  };
  if (split == std::string_view::npos) return {Rational(0), imag_of(body)};
  return {parse_rational(body.substr(0, split)), imag_of(body.substr(split))};
}

}  // namespace gwh
