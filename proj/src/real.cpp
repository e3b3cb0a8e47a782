#include "zetali/real.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>

#include "zetali/errors.hpp"

namespace zetali {

std::string Real::to_string(std::size_t digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
  if (mpfr_zero_p(v_)) return "0";

  mpfr_exp_t e;
  char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
  if (s == nullptr) throw Error("mpfr_get_str failed");
  std::string m(s);
  mpfr_free_str(s);

  bool neg = !m.empty() && m[0] == '-';
  std::string d = neg ? m.substr(1) : m;
  // strip trailing zeros but keep at least one digit
  std::size_t last = d.find_last_not_of('0');
  d = d.substr(0, last == std::string::npos ? 1 : last + 1);

  std::string out = neg ? "-" : "";
  out += d.substr(0, 1);
  if (d.size() > 1) out += "." + d.substr(1);
  long dec_exp = static_cast<long>(e) - 1;  // value = d.ddd * 10^dec_exp
  if (dec_exp != 0) out += "e" + std::to_string(dec_exp);
  return out;
}

Real Real::from_string(const std::string& s, mpfr_prec_t prec) {
  Real r(prec);
  const char* begin = s.c_str();
  char* end = nullptr;
  mpfr_strtofr(r.raw(), begin, &end, 10, MPFR_RNDN);
  if (end == begin) throw ParseError("not a number: '" + s + "'");
  while (*end == ' ' || *end == '\t') ++end;
  if (*end != '\0') throw ParseError("trailing characters in number: '" + s + "'");
  return r;
}

Real Real::pi(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

Real Real::euler_gamma(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_euler(r.raw(), MPFR_RNDN);
  return r;
}

Real Real::two_pow(long e, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_ui_2exp(r.raw(), 1, e, MPFR_RNDN);
  return r;
}

}  // namespace zetali
