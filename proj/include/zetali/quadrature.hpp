#pragma once

#include <functional>
#include <vector>

#include "zetali/complexnum.hpp"
#include "zetali/precision.hpp"

namespace zetali {

struct GLRule {
  std::vector<Real> nodes;    // on [-1, 1]
  std::vector<Real> weights;
};

// Gauss-Legendre rule, cached by (n, prec); thread-safe.
const GLRule& gauss_legendre(unsigned n, mpfr_prec_t prec);

// Adaptive composite Gauss-Legendre over the straight segment [z0, z1].
// Splits until the two-level estimates agree within tol; throws
// QuadratureError past max_depth.  err_out, when given, accumulates the
// observed refinement defects.
Complex integrate_segment(const std::function<Complex(const Complex&)>& fn,
                          const Complex& z0, const Complex& z1, const Real& tol,
                          mpfr_prec_t prec, int max_depth = 26,
                          Real* err_out = nullptr);

struct Evaluated {
  Complex value;
  Real error_bound;
};

struct CircleSeries {
  Complex center;
  std::vector<Complex> coeffs;      // c_0..c_K
  std::vector<Real> error_bounds;   // per coefficient
  unsigned nodes = 0;
};

// Taylor coefficients of log f around `center` by trapezoidal quadrature on
// |z - center| = radius.  The branch of log f is tracked continuously around
// the circle and must close up (the disk must be zero-free).  With
// conj_symmetric set (real center, f(conj z) = conj f(z)) only half the
// circle is evaluated and the coefficients are exactly real.  The node count
// doubles until successive coefficient sets agree within target_err.
CircleSeries log_taylor_on_circle(
    const std::function<Evaluated(const Complex&)>& f, const Complex& center,
    const Real& radius, unsigned K, const Real& target_err, mpfr_prec_t prec,
    bool conj_symmetric, unsigned m_start = 0);

// Taylor coefficients c_0..c_K of an analytic function around `center`
// (no branch tracking); used for numeric Laurent data of kernels.
CircleSeries taylor_on_circle_analytic(
    const std::function<Complex(const Complex&)>& f, const Complex& center,
    const Real& radius, unsigned K, const Real& target_err, mpfr_prec_t prec);

}  // namespace zetali
