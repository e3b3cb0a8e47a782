#pragma once

#include <mpfr.h>

#include <string>

namespace zetali {

// Arbitrary-precision real, RAII over mpfr_t.  Binary operators round to
// nearest and carry the larger of the two operand precisions; in-place
// operators keep the precision of the left-hand side.
class Real {
 public:
  Real() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
  explicit Real(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Real(double x, mpfr_prec_t prec = 64) {
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, x, MPFR_RNDN);
  }
  // exact signed-integer value at the given precision
  static Real si(long x, mpfr_prec_t prec = 64) {
    Real r(prec);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
  }

  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, 64);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  Real with_prec(mpfr_prec_t p) const {
    Real r(p);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  // Binary exponent of the leading bit; only meaningful for nonzero finites.
  long exponent() const { return static_cast<long>(mpfr_get_exp(v_)); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  // Decimal string; digits = 0 emits enough digits to round-trip.
  std::string to_string(std::size_t digits = 0) const;
  static Real from_string(const std::string& s, mpfr_prec_t prec);

  static Real pi(mpfr_prec_t prec);
  static Real euler_gamma(mpfr_prec_t prec);
  static Real two_pow(long e, mpfr_prec_t prec = 64);  // exact 2^e

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  Real& operator+=(const Real& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator-=(const Real& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator*=(const Real& o) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator/=(const Real& o) {
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }

  friend Real operator+(const Real& a, const Real& b) {
    Real r(pmax(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a, const Real& b) {
    Real r(pmax(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, const Real& b) {
    Real r(pmax(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(const Real& a, const Real& b) {
    Real r(pmax(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a) {
    Real r(a.prec());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }

 private:
  static mpfr_prec_t pmax(const Real& a, const Real& b) {
    return a.prec() > b.prec() ? a.prec() : b.prec();
  }
  mpfr_t v_;
};

#define ZETALI_REAL_UNARY(name, fn)          \
  inline Real name(const Real& a) {          \
    Real r(a.prec());                        \
    fn(r.raw(), a.raw(), MPFR_RNDN);         \
    return r;                                \
  }

ZETALI_REAL_UNARY(abs, mpfr_abs)
ZETALI_REAL_UNARY(sqrt, mpfr_sqrt)
ZETALI_REAL_UNARY(log, mpfr_log)
ZETALI_REAL_UNARY(exp, mpfr_exp)
ZETALI_REAL_UNARY(sin, mpfr_sin)
ZETALI_REAL_UNARY(cos, mpfr_cos)
#undef ZETALI_REAL_UNARY

inline Real floor(const Real& a) {
  Real r(a.prec());
  mpfr_floor(r.raw(), a.raw());
  return r;
}

inline Real atan2(const Real& y, const Real& x) {
  Real r(y.prec() > x.prec() ? y.prec() : x.prec());
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}
inline Real hypot(const Real& x, const Real& y) {
  Real r(y.prec() > x.prec() ? y.prec() : x.prec());
  mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}
inline Real pow_si(const Real& a, long n) {
  Real r(a.prec());
  mpfr_pow_si(r.raw(), a.raw(), n, MPFR_RNDN);
  return r;
}
inline Real pow(const Real& a, const Real& b) {
  Real r(a.prec() > b.prec() ? a.prec() : b.prec());
  mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline Real min(const Real& a, const Real& b) { return a < b ? a : b; }
inline Real max(const Real& a, const Real& b) { return a > b ? a : b; }

}  // namespace zetali
