#include <doctest.h>

#include <random>
#include <vector>

#include "zetali/li.hpp"
#include "zetali/special.hpp"

using namespace zetali;

namespace {

const PrecisionContext kCtx = PrecisionContext::bits(256);

ZeroCatalog& fixture30() {
  static ZeroCatalog cat =
      ZeroCatalog::ingest(std::string(ZETALI_TEST_DATA) + "/zeros_30.txt");
  return cat;
}

double urand(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

// paired sum over the catalog of 1/(1/4 + T^2) = sum 1/rho + 1/conj(rho)
Real sum_inv_rho(const ZeroCatalog& cat) {
  Real acc(0.0, 320);
  for (const auto& e : cat.entries()) {
    Real T = e.ordinate.with_prec(320);
    acc += Real::si(e.multiplicity, 320) / (Real(0.25, 320) + T * T);
  }
  return acc;
}

}  // namespace

TEST_CASE("mobius_base basics") {
  Real a(0.25), sigma(0.5);
  // rho = a gives 0
  Complex s0 = mobius_base(Complex(Real(0.25, 128)), a, sigma);
  CHECK(s0.abs() < Real::two_pow(-100));
  // pole at rho = 2 sigma - a
  CHECK_THROWS_AS(mobius_base(Complex(Real(0.75, 128)), a, sigma), PoleError);

  // on-line modulus 1 for 1000 random (a, sigma, T)
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    Real aa(urand(rng, -3.0, 3.0), 192);
    Real ss(urand(rng, -1.0, 2.0), 192);
    if (abs(aa - ss) < Real(1e-3)) continue;
    Real T(urand(rng, 0.1, 50.0), 192);
    Complex s = mobius_base(Complex(ss, T), aa, ss);
    CHECK(abs(s.abs() - Real(1.0)) < Real(1e-25));
  }
}

TEST_CASE("mobius modulus identity off the line") {
  // |s|^2 = 1 + (1-2a)(2q-1)/|rho + a - 1|^2 at sigma = 1/2
  Real a(0.2, 256), q(0.7, 256), T(3.7, 256);
  Complex rho(q, T);
  Complex s = mobius_base(rho, a, Real(0.5));
  Real lhs = s.norm();
  Complex den = rho + Complex(a - Real(1.0, 256));
  Real rhs = Real(1.0, 256) +
             (Real(1.0, 256) - Real(2.0, 256) * a) * (Real(2.0, 256) * q - Real(1.0, 256)) /
                 den.norm();
  CHECK(abs(lhs - rhs) < Real::two_pow(-240));
}

TEST_CASE("inversion pairing: s_{1-a}(1-rho) = s_a(rho)") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 64; ++i) {
    Real a(urand(rng, -2.0, 2.0), 192);
    Complex rho(urand(rng, -1.0, 2.0), urand(rng, 0.1, 30.0), 192);
    Complex lhs = mobius_base(Complex(Real(1.0, 192)) - rho, Real(1.0, 192) - a, Real(0.5));
    Complex rhs = mobius_base(rho, a, Real(0.5));
    CHECK((lhs - rhs).abs() < Real::two_pow(-180));
  }
}

TEST_CASE("conformal map property: a < 1/2, Re z <= 1/2 gives |s| <= 1") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 10000; ++i) {
    Real a(urand(rng, -3.0, 0.499), 128);
    double re = urand(rng, -4.0, 0.5);
    Complex z(Real(re, 128), Real(urand(rng, -30.0, 30.0), 128));
    Real m = mobius_base(z, a, Real(0.5)).abs();
    CHECK(m <= Real(1.0) + Real::two_pow(-100));
    if (re < 0.45) CHECK(m < Real(1.0));
  }
  // equality on the line itself
  Real m = mobius_base(Complex(0.5, 11.0, 192), Real(-1.0), Real(0.5)).abs();
  CHECK(abs(m - Real(1.0)) < Real::two_pow(-180));
}

TEST_CASE("theta_at") {
  // a = 1/2: angle identically zero
  for (double t : {0.5, 3.0, 14.0, 500.0}) CHECK(theta_at(Real(t), Real(0.5)).is_zero());

  CHECK_THROWS_AS(theta_at(Real(-1.0), Real(0.0)), DomainError);

  // matches arg(mobius_base) at the first ordinate
  Real T = Real::from_string("14.134725", 192);
  Real th = theta_at(T, Real(0.0, 192));
  Real expect = mobius_base(Complex(Real(0.5, 192), T), Real(0.0, 192), Real(0.5)).arg();
  CHECK(abs(th - expect) < Real(1e-20));

  // large-T behaviour at a = 0: theta ~ -1/T
  Real th_big = theta_at(Real(1e6, 192), Real(0.0, 192));
  CHECK(th_big < Real(0.0));
  CHECK(abs(th_big + Real(1e-6)) < Real(1e-11));
}

TEST_CASE("tail_estimate") {
  CHECK(tail_estimate(Real(0.5), 7, Real(10.0)).is_zero());
  CHECK_THROWS_AS(tail_estimate(Real(0.0), 1, Real(50.0)), DomainError);

  Real t1 = tail_estimate(Real(0.0), 3, Real(1000.0));
  Real t2 = tail_estimate(Real(0.0), 6, Real(1000.0));
  CHECK(abs(t2 - Real(4.0) * t1) < Real(1e-30));  // n doubled: exactly 4x

  Real r = tail_estimate(Real(0.0), 1, Real(1000.0)) / tail_estimate(Real(0.0), 1, Real(10000.0));
  CHECK(r.to_double() > 5.0);
  CHECK(r.to_double() < 10.0);
}

TEST_CASE("k sums: degenerate line a = 1/2 is exactly zero") {
  LiParams p(Real(0.5), 1, kCtx);
  auto ks = k_sums_from_zeros(fixture30(), p, 100);
  for (const auto& k : ks) {
    CHECK(k.value.is_zero());
    CHECK(k.tail_bound.is_zero());
  }
}

TEST_CASE("k(1,0) matches the paired 1/rho oracle on the same zeros") {
  LiParams p(Real(0.0), 1, kCtx);
  LiValue k1 = k_sum_from_zeros(fixture30(), p);
  Real oracle = sum_inv_rho(fixture30());
  CHECK(abs(k1.value - oracle) < Real::two_pow(-250));
  CHECK(k1.method == LiMethod::zero_sum);
  CHECK(k1.tail_bound > Real(0.0));
}

TEST_CASE("k(2,0) equals 2 sum 1/rho - sum 1/rho^2 on the same zeros") {
  LiParams p(Real(0.0), 2, kCtx);
  LiValue k2 = k_sum_from_zeros(fixture30(), p);
  // independent expansion: paired sums of 2/rho - 1/rho^2
  Real acc(0.0, 320);
  for (const auto& e : fixture30().entries()) {
    Complex rho(Real(0.5, 320), e.ordinate.with_prec(320));
    Complex term = Complex(Real(2.0, 320)) * inv(rho) - pow_int(inv(rho), 2);
    acc += Real(2.0, 320) * term.re();  // pair with the conjugate
  }
  CHECK(abs(k2.value - acc) < Real::two_pow(-250));
}

TEST_CASE("cutoff validation") {
  LiParams bad(Real(0.0), 1, kCtx, /*t_cutoff=*/Real(500.0));
  CHECK_THROWS_AS(k_sum_from_zeros(fixture30(), bad), DomainError);
}

TEST_CASE("zero_terms diagnostics are non-negative") {
  LiParams p(Real(0.25), 7, kCtx);
  auto terms = zero_terms(fixture30(), p, 10);
  REQUIRE(terms.size() == 10);
  for (const auto& t : terms) {
    CHECK(t.pair_contribution >= Real(0.0));
    CHECK(abs(t.s.abs() - Real(1.0)) < Real(1e-30));
  }
}

TEST_CASE("taylor coefficients from zeros") {
  TaylorSeries ts = taylor_coeffs_from_zeros(fixture30(), Real(0.0), 6, kCtx);
  REQUIRE(ts.coeffs.size() == 7);
  CHECK(ts.method == TaylorSeries::Method::from_zeros);
  // c_1 equals the paired 1/rho sum over the same zeros
  CHECK(abs(ts.coeffs[1].re() - sum_inv_rho(fixture30())) < Real::two_pow(-250));
  // exactly real by construction
  for (const auto& c : ts.coeffs) CHECK(c.im().is_zero());
  // c_0 = log xi(1)
  CHECK(abs(ts.coeffs[0].re() - log(Real(0.5, 320))) < Real(1e-60));

  // a = 1/2: c_1 vanishes by pairing
  TaylorSeries th = taylor_coeffs_from_zeros(fixture30(), Real(0.5), 2, kCtx);
  CHECK(th.coeffs[1].abs().is_zero());
}

TEST_CASE("cauchy-circle coefficients agree with the zero route within budgets") {
  TaylorSeries zc = taylor_coeffs_from_zeros(fixture30(), Real(0.0), 8, kCtx);
  TaylorSeries cc = taylor_coeffs_cauchy(Real(0.0), 8, Real(8.0), kCtx);
  REQUIRE(cc.coeffs.size() == 9);
  CHECK(cc.method == TaylorSeries::Method::cauchy_circle);
  // c_0 matches the direct evaluation exactly up to quadrature error
  CHECK(abs(cc.coeffs[0].re() - log(Real(0.5, 320))) < Real(1e-50));
  for (unsigned k = 1; k <= 8; ++k) {
    Real budget = zc.error_bounds[k] + cc.error_bounds[k];
    CHECK(abs(zc.coeffs[k].re() - cc.coeffs[k].re()) < budget);
  }
}

TEST_CASE("lambda from coefficients") {
  TaylorSeries cc = taylor_coeffs_cauchy(Real(0.0), 8, Real(8.0), kCtx);
  // n = 1: lambda = c_1
  LiValue l1 = lambda_from_coeffs(cc, Real(0.0), 1);
  CHECK(abs(l1.value - cc.coeffs[1].re()) < Real::two_pow(-250));
  // n = 2, a = 0: lambda = 2(c_1 + c_2)
  LiValue l2 = lambda_from_coeffs(cc, Real(0.0), 2);
  CHECK(abs(l2.value - Real(2.0) * (cc.coeffs[1].re() + cc.coeffs[2].re())) <
        Real::two_pow(-245));
  CHECK_THROWS_AS(lambda_from_coeffs(cc, Real(0.0), 20), DomainError);

  // degenerate center a = 1/2: lambda reduces to n c_n
  TaylorSeries ch = taylor_coeffs_cauchy(Real(0.5), 5, Real(8.0), kCtx);
  LiValue l3 = lambda_from_coeffs(ch, Real(0.5), 3);
  CHECK(abs(l3.value - Real(3.0) * ch.coeffs[3].re()) < Real::two_pow(-245));
}

TEST_CASE("lambda agrees with a finite-difference derivative oracle") {
  // brute force: lambda(n,a) = (1/(n-1)!) d^n/dz^n [(z-a)^(n-1) log xi(z)]
  // via the n-fold centred difference at step h
  PrecisionContext ctx = PrecisionContext::bits(320);
  Real h = Real::two_pow(-24, 512);
  for (double a_d : {0.0, 0.25, -0.5}) {
    Real a(a_d, 384);
    TaylorSeries cc = taylor_coeffs_cauchy(a, 6, Real(8.0), ctx);
    for (unsigned n : {2u, 3u, 4u}) {
      Real z0 = Real(1.0, 512) - a.with_prec(512);
      Real acc(0.0, 512);
      for (unsigned j = 0; j <= n; ++j) {
        // C(n,j) (-1)^j f(z0 + (n-2j)h)
        Real x = z0 + Real::si(static_cast<long>(n) - 2 * static_cast<long>(j), 512) * h;
        Real f = pow_si(x - a.with_prec(512), static_cast<long>(n) - 1) *
                 log_xi(Complex(x), ctx).re();
        Real binom(1.0, 512);
        for (unsigned i = 0; i < j; ++i)
          binom *= Real::si(static_cast<long>(n - i), 512) / Real::si(static_cast<long>(i + 1), 512);
        acc += ((j % 2) ? -binom : binom) * f;
      }
      Real dn = acc / pow_si(Real(2.0, 512) * h, static_cast<long>(n));
      Real fact(1.0, 512);
      for (unsigned i = 2; i < n; ++i) fact *= Real::si(static_cast<long>(i), 512);
      Real fd_lambda = dn / fact;

      LiValue lam = lambda_from_coeffs(cc, a, n);
      CHECK(abs(lam.value - fd_lambda) < Real(1e-9));
    }
  }
}

TEST_CASE("k_from_lambda") {
  TaylorSeries cc = taylor_coeffs_cauchy(Real(0.0), 4, Real(8.0), kCtx);
  LiValue lam = lambda_from_coeffs(cc, Real(0.0), 2);
  LiValue k = k_from_lambda(lam, Real(0.0));
  CHECK(k.value == lam.value);  // a = 0: k = lambda exactly

  LiValue lam_h = lambda_from_coeffs(taylor_coeffs_cauchy(Real(0.5), 4, Real(8.0), kCtx),
                                     Real(0.5), 2);
  LiValue kh = k_from_lambda(lam_h, Real(0.5));
  CHECK(kh.value.is_zero());

  LiValue wrong = k;
  wrong.method = LiMethod::zero_sum;
  CHECK_THROWS_AS(k_from_lambda(wrong, Real(0.0)), DomainError);
}

TEST_CASE("verify_identity on the small fixture") {
  auto rows = verify_identity(fixture30(), Real(0.0), 6, kCtx);
  REQUIRE(rows.size() == 6);
  for (const auto& r : rows) {
    CHECK(r.pass);
    CHECK(r.residual < r.budget);
  }
  CHECK_THROWS_AS(verify_identity(fixture30(), Real(0.5), 3, kCtx), DomainError);
}

TEST_CASE("zero-route symmetry k(n,a) = k(n,1-a) is exact") {
  LiParams pa(Real(0.0), 1, kCtx);
  LiParams pb(Real(1.0), 1, kCtx);
  auto ka = k_sums_from_zeros(fixture30(), pa, 12);
  auto kb = k_sums_from_zeros(fixture30(), pb, 12);
  for (unsigned i = 0; i < 12; ++i) CHECK(ka[i].value == kb[i].value);
}

TEST_CASE("sign_scan smoke") {
  auto rows = sign_scan(fixture30(), {Real(0.0), Real(0.25), Real(0.75)}, 6, kCtx);
  REQUIRE(rows.size() == 3);
  for (const auto& r : rows) CHECK(r.consistent);
  CHECK_THROWS_AS(sign_scan(fixture30(), {Real(0.5)}, 3, kCtx), DomainError);
}
