#pragma once

#include <vector>

#include "zetali/complexnum.hpp"
#include "zetali/precision.hpp"
#include "zetali/zero_catalog.hpp"

namespace zetali {

// Parameters for the generalized Li sums k(n,a) and their relatives.
struct LiParams {
  Real a;
  unsigned n;
  PrecisionContext ctx;
  Real t_cutoff;  // 0 = full catalog; otherwise must not exceed t_max
  Real sigma;     // generalized center; 1/2 matches the zero-sum formulas

  LiParams(Real a_, unsigned n_, PrecisionContext ctx_, Real t_cutoff_ = Real(0.0),
           Real sigma_ = Real(0.5))
      : a(std::move(a_)), n(n_), ctx(std::move(ctx_)), t_cutoff(std::move(t_cutoff_)),
        sigma(std::move(sigma_)) {
    if (n == 0) throw DomainError("n must be >= 1");
  }
};

// Per-zero diagnostic for one exponent n.
struct ZeroTerm {
  Complex rho;
  Complex s;               // Moebius image (rho - a) / (rho + a - 2 sigma)
  Real theta;              // arg s
  Real pair_contribution;  // 2(1 - cos n theta) for on-line zeros
};

enum class LiMethod { zero_sum, taylor_derivative };

struct LiValue {
  unsigned n;
  Real a;
  Real value;
  LiMethod method;
  Real tail_bound;   // zero_sum only; 0 otherwise
  Real error_bound;  // computation rounding / quadrature error
};

struct TaylorSeries {
  enum class Method { from_zeros, cauchy_circle };
  Complex center;  // 1 - a
  std::vector<Complex> coeffs;  // c_0..c_K of log xi about the center
  Method method;
  std::vector<Real> error_bounds;
};

// s = (rho - a) / (rho + a - 2 sigma); maps Re rho = sigma to |s| = 1.
Complex mobius_base(const Complex& rho, const Real& a, const Real& sigma);

// Angle of mobius_base(1/2 + iT, a, 1/2) via the two-argument arctangent of
// (T(2a-1), T^2 - a^2 + a - 1/4); requires T > 0.
Real theta_at(const Real& T, const Real& a);

// Upper bound on the discarded zero-sum tail beyond t_cutoff:
// 4 n^2 (1-2a)^2 (ln(t/2pi) + 1) / (2 pi t).  Exact 0 at a = 1/2;
// otherwise requires t_cutoff >= 100.
Real tail_estimate(const Real& a, unsigned n, const Real& t_cutoff, mpfr_prec_t prec = 128);

// k(n,a) for n = 1..n_max in one pass over conjugate-paired zeros,
// ascending T, fixed-size chunks combined in order.
std::vector<LiValue> k_sums_from_zeros(const ZeroCatalog& cat, const LiParams& p,
                                       unsigned n_max);
LiValue k_sum_from_zeros(const ZeroCatalog& cat, const LiParams& p);

std::vector<ZeroTerm> zero_terms(const ZeroCatalog& cat, const LiParams& p,
                                 std::size_t limit);

// c_0 = log xi(1-a); c_k = -(1/k) sum_rho (rho - (1-a))^(-k), conjugate
// paired, with per-coefficient tail bounds.
TaylorSeries taylor_coeffs_from_zeros(const ZeroCatalog& cat, const Real& a, unsigned K,
                                      const PrecisionContext& ctx);

// Same coefficients from trapezoidal quadrature of log xi on the circle
// |z - (1-a)| = radius (default 8); independent of any zero table.
TaylorSeries taylor_coeffs_cauchy(const Real& a, unsigned K, const Real& radius,
                                  const PrecisionContext& ctx);

// lambda(n,a) = n sum_{j=0}^{n-1} C(n-1,j) (1-2a)^(n-1-j) c_{n-j}: the
// binomial convolution realizing (1/(n-1)!) d^n/dz^n [(z-a)^(n-1) log xi]
// at z = 1-a.
LiValue lambda_from_coeffs(const TaylorSeries& ts, const Real& a, unsigned n);

// k(n,a) = (1-2a) * lambda(n,a).
LiValue k_from_lambda(const LiValue& lambda, const Real& a);

struct IdentityRow {
  unsigned n;
  Real k_zero_sum;
  Real tail_bound;
  Real k_taylor;
  Real residual;
  Real budget;
  bool pass;
};

// Residuals |k_zero_sum - (1-2a) lambda| against the combined error budget
// for n = 1..n_max.  Requires a != 1/2.
std::vector<IdentityRow> verify_identity(const ZeroCatalog& cat, const Real& a,
                                         unsigned n_max, const PrecisionContext& ctx,
                                         const Real& t_cutoff = Real(0.0));

struct SignScanRow {
  Real a;
  Real min_k_plus_tail;        // min over n of k(n,a) + tail_bound(n)
  Real min_signed_lambda;      // min over n of sign(1-2a) lambda(n,a) + slack
  bool consistent;
};

std::vector<SignScanRow> sign_scan(const ZeroCatalog& cat, const std::vector<Real>& a_grid,
                                   unsigned n_max, const PrecisionContext& ctx,
                                   const Real& t_cutoff = Real(0.0));

}  // namespace zetali
