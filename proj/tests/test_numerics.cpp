#include <doctest.h>

#include "zetali/bernoulli.hpp"
#include "zetali/complexnum.hpp"
#include "zetali/precision.hpp"
#include "zetali/real.hpp"

using namespace zetali;

TEST_CASE("real arithmetic and precision carry") {
  Real a(1.0, 256), b(3.0, 128);
  Real c = a / b;
  CHECK(c.prec() == 256);
  CHECK(abs(c * b - a) < Real::two_pow(-250));

  Real x = Real::from_string("14.134725141734693790", 256);
  CHECK(x.to_double() == doctest::Approx(14.134725141734694));
  Real y = Real::from_string(x.to_string(), 256);
  CHECK(x == y);
}

TEST_CASE("string parsing rejects junk") {
  CHECK_THROWS_AS(Real::from_string("12.3abc", 128), ParseError);
  CHECK_THROWS_AS(Real::from_string("", 128), ParseError);
}

TEST_CASE("atan2 antisymmetry is exact") {
  Real y(7.25, 192), x(3.5, 192);
  CHECK(atan2(-y, x) == -atan2(y, x));
}

TEST_CASE("complex basics") {
  Complex z(3.0, 4.0, 128);
  CHECK(z.abs() == Real(5.0));
  CHECK((z * z.conj()).re() == Real(25.0));
  CHECK((inv(z) * z - Complex(1.0, 0.0, 128)).abs() < Real::two_pow(-120));

  Complex w = pow_int(Complex(0.0, 1.0, 128), 4);
  CHECK((w - Complex(1.0, 0.0, 128)).abs() < Real::two_pow(-120));

  Real nan_r(0.0, 128);
  mpfr_set_nan(nan_r.raw());
  CHECK_THROWS_AS(Complex(nan_r, Real(0.0)), DomainError);
}

TEST_CASE("complex log/exp round trip") {
  Complex z(-2.0, 0.7, 192);
  Complex l = log(z);
  CHECK((exp(l) - z).abs() < Real::two_pow(-180));
  // principal branch: imaginary part in (-pi, pi]
  CHECK(l.im() <= Real::pi(192));
  CHECK(l.im() > -Real::pi(192));
}

TEST_CASE("bernoulli numbers match known values") {
  // B_2 = 1/6, B_4 = -1/30, B_12 = -691/2730
  CHECK(abs(bernoulli(2, 128) - Real(1.0, 128) / Real(6.0, 128)) < Real::two_pow(-120));
  CHECK(abs(bernoulli(4, 128) + Real(1.0, 128) / Real(30.0, 128)) < Real::two_pow(-120));
  CHECK(abs(bernoulli(12, 128) + Real(691.0, 128) / Real(2730.0, 128)) < Real::two_pow(-120));
  CHECK(bernoulli(3, 64).is_zero());
  CHECK(bernoulli(1, 64) == Real(-0.5));
}

TEST_CASE("precision context invariants") {
  CHECK_THROWS_AS(PrecisionContext::bits(32), DomainError);
  CHECK_THROWS_AS(PrecisionContext(128, Real::two_pow(-200)), DomainError);
  CHECK_THROWS_AS(PrecisionContext(128, Real(0.0)), DomainError);
  PrecisionContext ctx = PrecisionContext::bits(128);
  CHECK(ctx.target_abs_error == Real::two_pow(-112));
  // doubling the precision tightens the default target
  CHECK(PrecisionContext::bits(256).target_abs_error < ctx.target_abs_error);
}
