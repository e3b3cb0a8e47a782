#include "zetali/li.hpp"

#include <gmp.h>

#include <algorithm>
#include <future>
#include <thread>

#include "zetali/errors.hpp"
#include "zetali/quadrature.hpp"
#include "zetali/special.hpp"

namespace zetali {

Complex mobius_base(const Complex& rho, const Real& a, const Real& sigma) {
  mpfr_prec_t wp = std::max<mpfr_prec_t>(rho.prec(), std::max(a.prec(), sigma.prec()));
  Complex num = rho - Complex(a.with_prec(wp));
  Complex den = rho + Complex((a - Real(2.0) * sigma).with_prec(wp));
  if (den.is_zero()) throw PoleError("mobius_base pole at rho = 2 sigma - a");
  return num / den;
}

Real theta_at(const Real& T, const Real& a) {
  if (!(T > Real(0.0))) throw DomainError("theta_at requires T > 0");
  mpfr_prec_t wp = std::max<mpfr_prec_t>(std::max(T.prec(), a.prec()), 128);
  Real t = T.with_prec(wp), aa = a.with_prec(wp);
  Real y = t * (Real(2.0, wp) * aa - Real(1.0, wp));
  Real x = t * t - aa * aa + aa - Real(0.25, wp);
  return atan2(y, x);
}

Real tail_estimate(const Real& a, unsigned n, const Real& t_cutoff, mpfr_prec_t prec) {
  Real one_m2a = Real(1.0, prec) - Real(2.0, prec) * a.with_prec(prec);
  if (one_m2a.is_zero()) return Real(0.0, prec);
  if (!(t_cutoff >= Real(100.0))) throw DomainError("tail_estimate requires t_cutoff >= 100");
  Real t = t_cutoff.with_prec(prec);
  Real two_pi = Real(2.0, prec) * Real::pi(prec);
  Real n2 = Real::si(static_cast<long>(n), prec) * Real::si(static_cast<long>(n), prec);
  return Real(4.0, prec) * n2 * one_m2a * one_m2a * (log(t / two_pi) + Real(1.0, prec)) /
         (two_pi * t);
}

namespace {

constexpr std::size_t kChunk = 4096;

// Partial sums of 2(1 - cos n theta) (or the general-sigma analogue) for
// n = 1..n_max over one chunk of catalog entries.
std::vector<Real> chunk_sums(const std::vector<ZeroCatalog::Entry>& es, std::size_t lo,
                             std::size_t hi, const Real& a, const Real& sigma,
                             unsigned n_max, mpfr_prec_t wp, bool central) {
  std::vector<Real> acc(n_max, Real(0.0, wp));
  const Real one(1.0, wp), two(2.0, wp);
  Real aa = a.with_prec(wp);
  Real coef_y = two * aa - one;                      // 2a - 1
  Real coef_x = aa * aa - aa + Real(0.25, wp);       // a^2 - a + 1/4
  const Real half(0.5, wp);
  Real ss = sigma.with_prec(wp);

  for (std::size_t i = lo; i < hi; ++i) {
    const Real T = es[i].ordinate.with_prec(wp);
    Real mult(static_cast<long>(es[i].multiplicity), wp);
    if (central) {
      // cos(n theta) by the Chebyshev recurrence; theta from the exact
      // real/imaginary parts of the Moebius image, so a = 1/2 gives
      // cos theta = 1 and every term vanishes identically.
      Real y = T * coef_y;
      Real x = T * T - coef_x;
      Real h = hypot(x, y);
      Real c1 = x / h;
      Real cprev = one, ccur = c1;
      Real two_c1 = two * c1;
      for (unsigned n = 1; n <= n_max; ++n) {
        acc[n - 1] += mult * two * (one - ccur);
        Real cnext = two_c1 * ccur - cprev;
        cprev = ccur;
        ccur = cnext;
      }
    } else {
      Complex rho(half, T);
      Complex s = mobius_base(rho, aa, ss);
      Complex spow = s;
      for (unsigned n = 1; n <= n_max; ++n) {
        acc[n - 1] += mult * (two - two * spow.re());
        spow *= s;
      }
    }
  }
  return acc;
}

}  // namespace

std::vector<LiValue> k_sums_from_zeros(const ZeroCatalog& cat, const LiParams& p,
                                       unsigned n_max) {
  const auto& es = cat.entries();
  if (es.empty()) throw DomainError("empty catalog");
  Real cutoff = p.t_cutoff.is_zero() ? cat.t_max() : p.t_cutoff;
  if (cutoff > cat.t_max()) throw DomainError("t_cutoff exceeds catalog range");

  std::size_t count = 0;
  while (count < es.size() && es[count].ordinate <= cutoff) ++count;

  mpfr_prec_t wp = p.ctx.work_prec();
  bool central = (p.sigma == Real(0.5));

  std::size_t n_chunks = (count + kChunk - 1) / kChunk;
  std::vector<std::vector<Real>> partials(n_chunks);
  auto job = [&](std::size_t c) {
    return chunk_sums(es, c * kChunk, std::min(count, (c + 1) * kChunk), p.a, p.sigma,
                      n_max, wp, central);
  };
  if (count > 4 * kChunk && std::thread::hardware_concurrency() > 1) {
    std::vector<std::future<std::vector<Real>>> futs;
    futs.reserve(n_chunks);
    for (std::size_t c = 0; c < n_chunks; ++c)
      futs.push_back(std::async(std::launch::async, job, c));
    for (std::size_t c = 0; c < n_chunks; ++c) partials[c] = futs[c].get();
  } else {
    for (std::size_t c = 0; c < n_chunks; ++c) partials[c] = job(c);
  }

  std::vector<Real> totals(n_max, Real(0.0, wp));
  for (std::size_t c = 0; c < n_chunks; ++c)
    for (unsigned n = 0; n < n_max; ++n) totals[n] += partials[c][n];

  Real rounding = Real::two_pow(-(wp - 10)) * Real::si(static_cast<long>(count + 16)) * Real(8.0);
  std::vector<LiValue> out;
  out.reserve(n_max);
  for (unsigned n = 1; n <= n_max; ++n) {
    out.push_back(LiValue{n, p.a, totals[n - 1], LiMethod::zero_sum,
                          tail_estimate(p.a, n, cutoff, p.ctx.precision_bits), rounding});
  }
  return out;
}

LiValue k_sum_from_zeros(const ZeroCatalog& cat, const LiParams& p) {
  return k_sums_from_zeros(cat, p, p.n).back();
}

std::vector<ZeroTerm> zero_terms(const ZeroCatalog& cat, const LiParams& p,
                                 std::size_t limit) {
  std::vector<ZeroTerm> out;
  mpfr_prec_t wp = p.ctx.work_prec();
  const Real half(0.5, wp), one(1.0, wp), two(2.0, wp);
  for (const auto& e : cat.entries()) {
    if (out.size() >= limit) break;
    Complex rho(half, e.ordinate.with_prec(wp));
    Complex s = mobius_base(rho, p.a, p.sigma);
    Real th = s.arg();
    Real contrib = two * (one - cos(Real::si(static_cast<long>(p.n), wp) * th));
    out.push_back(ZeroTerm{rho, s, th, contrib});
  }
  return out;
}

TaylorSeries taylor_coeffs_from_zeros(const ZeroCatalog& cat, const Real& a, unsigned K,
                                      const PrecisionContext& ctx) {
  if (K < 1) throw DomainError("K must be >= 1");
  mpfr_prec_t wp = ctx.work_prec();
  Real z0 = Real(1.0, wp) - a.with_prec(wp);  // evaluation point 1-a
  Real beta = Real(0.5, wp) - z0;             // Re(rho - z0)

  std::vector<Real> sums(K, Real(0.0, wp));
  const Real two(2.0, wp);
  for (const auto& e : cat.entries()) {
    Real T = e.ordinate.with_prec(wp);
    Real mult(static_cast<long>(e.multiplicity), wp);
    Complex w = inv(Complex(beta, T));  // 1/(rho - z0)
    Complex wp_pow = w;
    for (unsigned k = 1; k <= K; ++k) {
      sums[k - 1] += mult * two * wp_pow.re();
      wp_pow *= w;
    }
  }

  TaylorSeries ts;
  ts.method = TaylorSeries::Method::from_zeros;
  ts.center = Complex(z0);
  ts.coeffs.reserve(K + 1);
  ts.error_bounds.reserve(K + 1);

  Complex c0 = log_xi(Complex(z0), ctx);
  ts.coeffs.push_back(c0);
  ts.error_bounds.push_back(ctx.target_abs_error);

  // per-coefficient truncation tails beyond t_max, with the safety factor 4
  Real t0 = cat.t_max().with_prec(wp);
  Real two_pi = Real(2.0, wp) * Real::pi(wp);
  Real lt = log(t0 / two_pi);
  Real count_r(static_cast<long>(cat.zero_count()), wp);
  for (unsigned k = 1; k <= K; ++k) {
    Real tail(wp);
    if (k == 1) {
      tail = Real(4.0, wp) * abs(beta) * (lt + Real(1.0, wp)) / (Real::pi(wp) * t0);
    } else {
      Real km1(static_cast<long>(k - 1), wp);
      tail = Real(4.0, wp) / Real::pi(wp) * pow_si(t0, -(static_cast<long>(k) - 1)) *
             (lt / km1 + Real(1.0, wp) / (km1 * km1));
    }
    Real rounding = Real::two_pow(-(wp - 10)) * count_r * Real(8.0, wp);
    ts.coeffs.push_back(Complex(-sums[k - 1] / Real::si(static_cast<long>(k), wp)));
    ts.error_bounds.push_back(tail + rounding);
  }
  return ts;
}

TaylorSeries taylor_coeffs_cauchy(const Real& a, unsigned K, const Real& radius,
                                  const PrecisionContext& ctx) {
  if (K < 1) throw DomainError("K must be >= 1");
  if (!(radius > Real(0.0)) || radius > Real(13.0))
    throw QuadratureError("radius must lie in (0, 13]: nearest xi zero is ~14.13 away");
  mpfr_prec_t wp = ctx.work_prec();
  Complex center(Real(1.0, wp) - a.with_prec(wp));

  PrecisionContext inner(wp, ctx.target_abs_error * Real::two_pow(-24));
  auto f = [&inner](const Complex& z) { return xi_eval(z, inner); };
  CircleSeries cs = log_taylor_on_circle(f, center, radius.with_prec(wp), K,
                                         (ctx.target_abs_error * Real::two_pow(-8)).with_prec(wp),
                                         wp, /*conj_symmetric=*/true, /*m_start=*/256);
  TaylorSeries ts;
  ts.method = TaylorSeries::Method::cauchy_circle;
  ts.center = center;
  ts.coeffs = std::move(cs.coeffs);
  ts.error_bounds = std::move(cs.error_bounds);
  return ts;
}

LiValue lambda_from_coeffs(const TaylorSeries& ts, const Real& a, unsigned n) {
  if (n == 0) throw DomainError("n must be >= 1");
  if (ts.coeffs.size() <= n)
    throw DomainError("insufficient Taylor coefficients for requested n");
  mpfr_prec_t wp = std::max<mpfr_prec_t>(ts.coeffs[0].prec(), a.prec());
  Real z0 = Real(1.0, wp) - a.with_prec(wp);
  if ((ts.center - Complex(z0)).abs() > Real::two_pow(-(wp / 2)))
    throw DomainError("series center does not match 1 - a");

  Real b = Real(1.0, wp) - Real(2.0, wp) * a.with_prec(wp);
  Real acc(0.0, wp);
  Real err(0.0, wp);
  Real b_pow(1.0, wp);  // b^(m-1) for coefficient index m
  mpz_t binom;
  mpz_init(binom);
  for (unsigned m = 1; m <= n; ++m) {
    mpz_bin_uiui(binom, n - 1, n - m);
    Real c(wp);
    mpfr_set_z(c.raw(), binom, MPFR_RNDN);
    acc += c * b_pow * ts.coeffs[m].re();
    err += c * abs(b_pow) * (ts.error_bounds[m] + abs(ts.coeffs[m].im()));
    b_pow *= b;
  }
  mpz_clear(binom);
  Real nn(static_cast<long>(n), wp);
  Real rounding = Real::two_pow(-(wp - 10)) * Real::si(static_cast<long>(n + 8), wp) *
                  (Real(1.0, wp) + abs(acc));
  return LiValue{n, a, nn * acc, LiMethod::taylor_derivative, Real(0.0, wp),
                 nn * err + rounding};
}

LiValue k_from_lambda(const LiValue& lambda, const Real& a) {
  if (lambda.method != LiMethod::taylor_derivative)
    throw DomainError("k_from_lambda expects a taylor_derivative value");
  mpfr_prec_t wp = lambda.value.prec();
  Real b = Real(1.0, wp) - Real(2.0, wp) * a.with_prec(wp);
  return LiValue{lambda.n, a, b * lambda.value, LiMethod::taylor_derivative,
                 Real(0.0, wp), abs(b) * lambda.error_bound};
}

std::vector<IdentityRow> verify_identity(const ZeroCatalog& cat, const Real& a,
                                         unsigned n_max, const PrecisionContext& ctx,
                                         const Real& t_cutoff) {
  if (abs(a - Real(0.5)) < Real::two_pow(-40))
    throw DomainError("verify_identity requires a != 1/2");

  LiParams p(a, 1, ctx, t_cutoff);
  std::vector<LiValue> ks = k_sums_from_zeros(cat, p, n_max);
  TaylorSeries ts = taylor_coeffs_cauchy(a, n_max, Real(8.0), ctx);

  std::vector<IdentityRow> rows;
  rows.reserve(n_max);
  for (unsigned n = 1; n <= n_max; ++n) {
    LiValue lam = lambda_from_coeffs(ts, a, n);
    LiValue kt = k_from_lambda(lam, a);
    const LiValue& kz = ks[n - 1];
    Real residual = abs(kz.value - kt.value);
    Real budget = kz.tail_bound + kz.error_bound + kt.error_bound;
    rows.push_back(IdentityRow{n, kz.value, kz.tail_bound, kt.value, residual, budget,
                               residual <= budget});
  }
  return rows;
}

std::vector<SignScanRow> sign_scan(const ZeroCatalog& cat, const std::vector<Real>& a_grid,
                                   unsigned n_max, const PrecisionContext& ctx,
                                   const Real& t_cutoff) {
  std::vector<SignScanRow> rows;
  rows.reserve(a_grid.size());
  for (const Real& a : a_grid) {
    if (abs(a - Real(0.5)) < Real::two_pow(-40))
      throw DomainError("sign_scan grid must exclude a = 1/2");
    Real sign_b = (a < Real(0.5)) ? Real(1.0) : Real(-1.0);

    LiParams p(a, 1, ctx, t_cutoff);
    std::vector<LiValue> ks = k_sums_from_zeros(cat, p, n_max);
    TaylorSeries ts = taylor_coeffs_cauchy(a, n_max, Real(8.0), ctx);

    Real min_k(ctx.work_prec());
    mpfr_set_inf(min_k.raw(), 1);
    Real min_l = min_k;
    for (unsigned n = 1; n <= n_max; ++n) {
      Real ks_slack = ks[n - 1].value + ks[n - 1].tail_bound + ks[n - 1].error_bound;
      if (ks_slack < min_k) min_k = ks_slack;
      LiValue lam = lambda_from_coeffs(ts, a, n);
      Real ls = sign_b * lam.value + lam.error_bound;
      if (ls < min_l) min_l = ls;
    }
    rows.push_back(SignScanRow{a, min_k, min_l,
                               min_k >= Real(0.0) && min_l >= Real(0.0)});
  }
  return rows;
}

}  // namespace zetali
