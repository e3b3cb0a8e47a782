#pragma once

#include <string>
#include <utility>

#include "zetali/errors.hpp"
#include "zetali/real.hpp"

namespace zetali {

// Complex number over Real.  Public constructors reject non-finite
// components; arithmetic results inherit that invariant (the mpfr
// exponent range makes overflow to infinity unreachable in practice).
class Complex {
 public:
  Complex() : re_(0.0, 64), im_(0.0, 64) {}
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {
    if (!re_.is_finite() || !im_.is_finite())
      throw DomainError("non-finite complex component");
  }
  Complex(double re, double im, mpfr_prec_t prec = 64)
      : re_(re, prec), im_(im, prec) {
    if (!re_.is_finite() || !im_.is_finite())
      throw DomainError("non-finite complex component");
  }
  explicit Complex(const Real& re) : re_(re), im_(0.0, re.prec()) {
    if (!re_.is_finite()) throw DomainError("non-finite complex component");
  }

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  mpfr_prec_t prec() const { return re_.prec() > im_.prec() ? re_.prec() : im_.prec(); }
  Complex with_prec(mpfr_prec_t p) const { return Complex(re_.with_prec(p), im_.with_prec(p)); }

  Complex conj() const { return Complex(re_, -im_); }
  Real abs() const { return hypot(re_, im_); }
  Real arg() const { return atan2(im_, re_); }  // two-argument convention
  Real norm() const { return re_ * re_ + im_ * im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  std::string to_string(std::size_t digits = 0) const {
    return re_.to_string(digits) + (im_.sign() < 0 ? " - " : " + ") +
           zetali::abs(im_).to_string(digits) + "i";
  }

  friend Complex operator+(const Complex& a, const Complex& b) {
    return Complex(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend Complex operator-(const Complex& a, const Complex& b) {
    return Complex(a.re_ - b.re_, a.im_ - b.im_);
  }
  friend Complex operator-(const Complex& a) { return Complex(-a.re_, -a.im_); }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return Complex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
  }
  friend Complex operator*(const Real& s, const Complex& a) {
    return Complex(s * a.re_, s * a.im_);
  }
  friend Complex operator*(const Complex& a, const Real& s) { return s * a; }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.norm();
    return Complex((a.re_ * b.re_ + a.im_ * b.im_) / d,
                   (a.im_ * b.re_ - a.re_ * b.im_) / d);
  }
  friend Complex operator/(const Complex& a, const Real& s) {
    return Complex(a.re_ / s, a.im_ / s);
  }
  friend bool operator==(const Complex& a, const Complex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

  Complex& operator+=(const Complex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    *this = *this * o;
    return *this;
  }

 private:
  Real re_, im_;
};

inline Complex inv(const Complex& z) {
  Real d = z.norm();
  return Complex(z.re() / d, -z.im() / d);
}

// Principal logarithm: imaginary part in (-pi, pi].
inline Complex log(const Complex& z) {
  if (z.is_zero()) throw PoleError("log of zero");
  return Complex(log(z.abs()), z.arg());
}

inline Complex exp(const Complex& z) {
  Real m = exp(z.re());
  Real c(z.prec()), s(z.prec());
  mpfr_sin_cos(s.raw(), c.raw(), z.im().raw(), MPFR_RNDN);
  return Complex(m * c, m * s);
}

inline Complex pow_int(const Complex& z, long n) {
  if (n < 0) return inv(pow_int(z, -n));
  Complex acc(Real(1.0, z.prec()));
  Complex base = z;
  unsigned long e = static_cast<unsigned long>(n);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

}  // namespace zetali
