#include "zetali/special.hpp"

#include <cmath>
#include <cstdlib>

#include "zetali/bernoulli.hpp"
#include "zetali/errors.hpp"

namespace zetali {

namespace {

// k^(-s) at the precision of s.
Complex pow_neg(long k, const Complex& s) {
  mpfr_prec_t wp = s.prec();
  Real lnk(wp);
  mpfr_set_si(lnk.raw(), k, MPFR_RNDN);
  mpfr_log(lnk.raw(), lnk.raw(), MPFR_RNDN);
  return exp(Complex(-s.re() * lnk, -s.im() * lnk));
}

struct EmCore {
  Complex partial;      // sum_{k=1}^{N-1} k^{-s}
  Complex half_term;    // N^{-s} / 2
  Complex pole_term;    // N^{1-s} (without the 1/(s-1))
  Complex corrections;  // Bernoulli tail
  Real truncation;      // certified remainder bound
  long n_used = 0;
  bool ok = false;
};

// Euler-Maclaurin pieces for zeta(s) with remainder bound
//   |R| <= |T_{M+1}| * |s + 2M + 1| / (sigma + 2M + 1).
EmCore em_attempt(const Complex& s, long N, const Real& eps, mpfr_prec_t wp) {
  EmCore out;
  const Real one(1.0, wp);
  Complex sum(Real(0.0, wp), Real(0.0, wp));
  for (long k = 1; k < N; ++k) sum += pow_neg(k, s);
  Complex n_pow = pow_neg(N, s);  // N^{-s}
  Real n_real(static_cast<long>(N), wp);

  out.partial = sum;
  out.half_term = n_pow * Real(0.5, wp);
  out.pole_term = n_pow * n_real;  // N^{1-s}

  // T_j = B_{2j}/(2j)! * prod_{i=0}^{2j-2}(s+i) * N^{-s-2j+1}
  Complex R = s * (n_pow / n_real);  // j = 1: s * N^{-s-1}
  Real fact(2.0, wp);                // (2j)!
  Complex acc(Real(0.0, wp), Real(0.0, wp));
  Real sigma = s.re();
  Real n_sq = n_real * n_real;
  Real prev_bound(wp);
  mpfr_set_inf(prev_bound.raw(), 1);

  for (unsigned j = 1; j <= 320; ++j) {
    Complex Tj = bernoulli(2 * j, wp) / fact * R;
    Real denom = sigma + Real(2.0 * j - 1.0, wp);
    if (denom > Real(0.0)) {
      Real bound = Tj.abs() * (s + Complex(Real(2.0 * j - 1.0, wp), Real(0.0, wp))).abs() / denom;
      if (bound <= eps) {
        out.corrections = acc;
        out.truncation = bound;
        out.n_used = N;
        out.ok = true;
        return out;
      }
      if (j > 8 && bound > prev_bound * Real(4.0)) break;  // asymptotic series diverging
      if (bound < prev_bound) prev_bound = bound;
    }
    acc += Tj;
    R *= (s + Complex(Real(2.0 * j - 1.0, wp), Real(0.0, wp))) *
         (s + Complex(Real(2.0 * j, wp), Real(0.0, wp))) / n_sq;
    fact *= Real((2.0 * j + 1.0) * (2.0 * j + 2.0), wp);
  }
  return out;  // ok = false
}

struct ZetaParts {
  EmCore core;
  Complex s;
  mpfr_prec_t wp;
};

ZetaParts zeta_core(const Complex& s_in, const PrecisionContext& ctx, bool fused_sm1) {
  double sig_d = s_in.re().to_double();
  double t_d = std::abs(s_in.im().to_double());

  mpfr_prec_t wp = ctx.work_prec() + 32;
  if (t_d > 64.0) wp += static_cast<mpfr_prec_t>(std::log2(t_d)) + 8;
  if (sig_d < 0.0) wp += static_cast<mpfr_prec_t>((-sig_d + 2.0) * 14.0) + 16;
  if (!fused_sm1) {
    // cancellation guard near the pole
    Complex d = s_in - Complex(1.0, 0.0);
    if (d.is_zero()) throw PoleError("zeta pole at s = 1");
    double ad = d.abs().to_double();
    if (ad < 0.25) wp += static_cast<mpfr_prec_t>(-std::log2(ad)) + 8;
  }

  Complex s = s_in.with_prec(wp);
  Real eps = (ctx.target_abs_error * Real(0.125)).with_prec(wp);

  long n0 = 24 + static_cast<long>(wp) / 4 + static_cast<long>(0.8 * t_d);
  for (int attempt = 0; attempt < 5; ++attempt) {
    EmCore core = em_attempt(s, n0 << attempt, eps, wp);
    if (core.ok) return ZetaParts{std::move(core), s, wp};
  }
  throw PrecisionError("Euler-Maclaurin did not reach the target error");
}

Real rounding_bound(const ZetaParts& p, const Real& scale) {
  return Real::two_pow(-(p.wp - 10), p.wp) * Real(p.core.n_used + 400, p.wp) *
         max(Real(1.0, p.wp), scale);
}

// error propagation through products of Evaluated factors
Evaluated mul_ev(const Evaluated& a, const Evaluated& b) {
  Real err = a.value.abs() * b.error_bound + b.value.abs() * a.error_bound +
             a.error_bound * b.error_bound;
  Complex v = a.value * b.value;
  err += v.abs() * Real::two_pow(-(v.prec() - 4));
  return Evaluated{v, err};
}

Evaluated exact_ev(const Complex& v) {
  return Evaluated{v, v.abs() * Real::two_pow(-(v.prec() - 4))};
}

}  // namespace

Evaluated zeta_eval(const Complex& s, const PrecisionContext& ctx) {
  ZetaParts p = zeta_core(s, ctx, false);
  Complex sm1 = p.s - Complex(Real(1.0, p.wp), Real(0.0, p.wp));
  Complex v = p.core.partial + p.core.half_term + p.core.pole_term / sm1 + p.core.corrections;
  // rounding scales with the largest intermediate, not the result
  Real scale = v.abs() + p.core.partial.abs() + p.core.pole_term.abs() / sm1.abs();
  Real err = p.core.truncation + rounding_bound(p, scale);
  if (err > ctx.target_abs_error)
    throw PrecisionError("zeta: certified error exceeds target");
  return Evaluated{v, err};
}

Complex zeta(const Complex& s, const PrecisionContext& ctx) { return zeta_eval(s, ctx).value; }

Evaluated zeta_sm1_eval(const Complex& s, const PrecisionContext& ctx) {
  ZetaParts p = zeta_core(s, ctx, true);
  Complex sm1 = p.s - Complex(Real(1.0, p.wp), Real(0.0, p.wp));
  Complex v = sm1 * (p.core.partial + p.core.half_term + p.core.corrections) + p.core.pole_term;
  Real scale = v.abs() + p.core.partial.abs() * (sm1.abs() + Real(1.0, p.wp));
  Real err = p.core.truncation * (sm1.abs() + Real(1.0, p.wp)) + rounding_bound(p, scale);
  if (err > ctx.target_abs_error)
    throw PrecisionError("zeta_sm1: certified error exceeds target");
  return Evaluated{v, err};
}

namespace {

// log Gamma by Stirling for Re w above the lift threshold; relative error.
struct LnGamma {
  Complex value;
  Real rel_err;
};

LnGamma stirling_lngamma(const Complex& w, mpfr_prec_t wp, const Real& eps_rel) {
  const Real half(0.5, wp);
  Complex lw = log(w);
  Complex acc = (w - Complex(half, Real(0.0, wp))) * lw - w +
                Complex(half * log(Real(2.0, wp) * Real::pi(wp)), Real(0.0, wp));

  // sec(phi/2) factor for the remainder bound; phi = arg w <= pi/4 after lift
  Real phi = w.arg();
  Real sec_half = Real(1.0, wp) / cos(phi * half);

  Complex p = inv(w);  // w^{-(2j-1)} for j = 1
  Complex w2 = w * w;
  Real prev(wp);
  mpfr_set_inf(prev.raw(), 1);
  for (unsigned j = 1; j <= 200; ++j) {
    Complex Uj = bernoulli(2 * j, wp) / Real((2.0 * j) * (2.0 * j - 1.0), wp) * p;
    // first-omitted-term bound with the sec(phi/2) inflation
    Real bound = Uj.abs() * Real(2.0, wp) * pow_si(sec_half, 2 * j + 2);
    if (bound <= eps_rel) return LnGamma{acc, bound};
    Real u = Uj.abs();
    if (j > 6 && u > prev) throw PrecisionError("Stirling series diverging; lift too small");
    prev = u;
    acc += Uj;
    p = p / w2;
  }
  throw PrecisionError("Stirling series did not converge");
}

}  // namespace

Evaluated gamma_eval(const Complex& z, const PrecisionContext& ctx) {
  mpfr_prec_t wp = ctx.work_prec() + 32;
  double re_d = z.re().to_double();
  double im_d = std::abs(z.im().to_double());

  // pole at non-positive integers
  if (im_d == 0.0) {
    Real r = z.re();
    Real rounded = floor(r + Real(0.5, r.prec()));
    if (rounded <= Real(0.0) && abs(r - rounded) < Real::two_pow(-(wp / 2)))
      throw PoleError("gamma pole at non-positive integer");
  }

  // estimate |Gamma| to size the working precision for an absolute target
  double lift_d = std::max({12.0, 0.12 * static_cast<double>(wp) + 6.0, im_d});
  double wd = std::max(re_d, lift_d);
  double lg_est = (wd - 0.5) * std::log(std::hypot(wd, im_d)) - wd + 1.0;
  if (lg_est > 0) wp += static_cast<mpfr_prec_t>(lg_est * 1.4427) + 16;

  Complex zz = z.with_prec(wp);
  long m = 0;
  double need = lift_d - re_d;
  if (need > 0) m = static_cast<long>(std::ceil(need));

  Complex w = zz + Complex(Real::si(m, wp), Real(0.0, wp));
  Real eps_rel = Real::two_pow(-(ctx.work_prec()), wp);
  LnGamma lg = stirling_lngamma(w, wp, eps_rel);

  Complex denom(Real(1.0, wp), Real(0.0, wp));
  for (long i = 0; i < m; ++i) denom *= zz + Complex(Real::si(i, wp), Real(0.0, wp));
  Complex v = exp(lg.value) / denom;

  Real rel = lg.rel_err + Real::two_pow(-(wp - 8), wp) * Real::si(m + 8, wp);
  Real err = v.abs() * rel;
  if (err > ctx.target_abs_error)
    throw PrecisionError("gamma: certified error exceeds target");
  return Evaluated{v, err};
}

Complex gamma_fn(const Complex& z, const PrecisionContext& ctx) {
  return gamma_eval(z, ctx).value;
}

Evaluated xi_eval(const Complex& z, const PrecisionContext& ctx) {
  mpfr_prec_t wp = ctx.work_prec() + 16;
  Complex zz = z.with_prec(wp);
  const Real half(0.5, wp);
  const Complex one(Real(1.0, wp), Real(0.0, wp));

  // inner context: product of ~4 factors, so demand a stricter target
  PrecisionContext inner(wp - 16, ctx.target_abs_error * Real::two_pow(-24));

  double re_d = zz.re().to_double();
  double im_d = std::abs(zz.im().to_double());
  bool near0 = zz.abs() < Real(0.25);
  bool near1 = (zz - one).abs() < Real(0.25);

  // reflected constituents dodge the Gamma poles at negative even integers;
  // used only in their immediate neighbourhood so the functional-equation
  // property test stays a comparison of independent evaluations.
  bool reflect = false;
  if (!near0 && !near1 && im_d < 0.125 && re_d < -1.0) {
    double nearest_even = 2.0 * std::round(re_d / 2.0);
    if (std::abs(re_d - nearest_even) < 0.125) reflect = true;
  }

  Complex zeval = reflect ? one - zz : zz;

  Evaluated pi_pow;
  {
    Complex e = Complex(Real(-0.5, wp), Real(0.0, wp)) * zeval * Complex(log(Real::pi(wp)), Real(0.0, wp));
    Complex v = exp(e);
    pi_pow = Evaluated{v, v.abs() * Real::two_pow(-(wp - 8), wp) * (Real(1.0, wp) + e.abs())};
  }

  Evaluated result;
  if (near1) {
    // 1/2 z pi^(-z/2) Gamma(z/2) * [(z-1) zeta(z)]
    Evaluated g = gamma_eval(zz * half, inner);
    Evaluated zs = zeta_sm1_eval(zz, inner);
    result = mul_ev(mul_ev(exact_ev(zz * half), pi_pow), mul_ev(g, zs));
  } else if (near0) {
    // (z-1) pi^(-z/2) Gamma(z/2+1) zeta(z)
    Evaluated g = gamma_eval(zz * half + one, inner);
    Evaluated zv = zeta_eval(zz, inner);
    result = mul_ev(mul_ev(exact_ev(zz - one), pi_pow), mul_ev(g, zv));
  } else {
    Evaluated g = gamma_eval(zeval * half, inner);
    Evaluated zv = zeta_eval(zeval, inner);
    Complex pref = half * zz * (zz - one);  // symmetric under z <-> 1-z
    result = mul_ev(mul_ev(exact_ev(pref), pi_pow), mul_ev(g, zv));
  }
  if (result.error_bound > ctx.target_abs_error)
    throw PrecisionError("xi: certified error exceeds target");
  return result;
}

Complex xi(const Complex& z, const PrecisionContext& ctx) { return xi_eval(z, ctx).value; }

Complex log_xi(const Complex& z, const PrecisionContext& ctx) {
  Evaluated xe = xi_eval(z, ctx);
  Real av = xe.value.abs();
  if (av.is_zero() || xe.error_bound > av * ctx.target_abs_error * Real(0.25))
    throw ZeroOfXiError("log xi: |xi| below the underflow guard");
  return log(xe.value);
}

Complex xi_logderiv(const Complex& z, const PrecisionContext& ctx) {
  // reject evaluation at a zero
  (void)log_xi(z, ctx);

  double im_d = std::abs(z.im().to_double());
  Real radius = im_d < 10.0 ? Real(1.0) : Real(0.25);
  mpfr_prec_t wp = ctx.work_prec();
  PrecisionContext inner(wp, ctx.target_abs_error * Real::two_pow(-20));
  auto f = [&inner](const Complex& w) { return xi_eval(w, inner); };

  bool on_axis = z.im().is_zero();
  CircleSeries cs =
      log_taylor_on_circle(f, z.with_prec(wp), radius.with_prec(wp), 1,
                           (ctx.target_abs_error * Real(0.25)).with_prec(wp), wp, on_axis);
  if (cs.error_bounds[1] > ctx.target_abs_error)
    throw PrecisionError("xi_logderiv: quadrature error exceeds target");
  return cs.coeffs[1];
}

}  // namespace zetali
