#pragma once

#include "zetali/complexnum.hpp"
#include "zetali/precision.hpp"
#include "zetali/quadrature.hpp"

namespace zetali {

// Riemann zeta by Euler-Maclaurin; term and correction counts adapt to the
// certified remainder bound.  The returned error_bound covers truncation
// and rounding.
Evaluated zeta_eval(const Complex& s, const PrecisionContext& ctx);
Complex zeta(const Complex& s, const PrecisionContext& ctx);

// (s-1) * zeta(s), evaluated as a fused factor; entire, equals 1 at s = 1.
Evaluated zeta_sm1_eval(const Complex& s, const PrecisionContext& ctx);

// Gamma by Stirling's series after recurrence-lifting Re z above a
// precision-dependent threshold.
Evaluated gamma_eval(const Complex& z, const PrecisionContext& ctx);
Complex gamma_fn(const Complex& z, const PrecisionContext& ctx);

// xi(z) = 1/2 z(z-1) pi^(-z/2) Gamma(z/2) zeta(z); entire.  Near z = 1 the
// fused (z-1)zeta(z) factor is used, near z = 0 the identity
// z Gamma(z/2) = 2 Gamma(z/2 + 1) removes the 0 * inf form.
Evaluated xi_eval(const Complex& z, const PrecisionContext& ctx);
Complex xi(const Complex& z, const PrecisionContext& ctx);

// Principal branch of log xi, real on the real segment (0,1); callers that
// need continued branches track them separately.
Complex log_xi(const Complex& z, const PrecisionContext& ctx);

// xi'/xi by Cauchy differentiation of log xi on a small circle around z.
Complex xi_logderiv(const Complex& z, const PrecisionContext& ctx);

}  // namespace zetali
