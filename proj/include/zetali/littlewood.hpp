#pragma once

#include <functional>
#include <string>
#include <vector>

#include "zetali/complexnum.hpp"
#include "zetali/precision.hpp"
#include "zetali/zero_catalog.hpp"

namespace zetali {

struct RectContour {
  Real x1, x2, y1, y2;
  RectContour(Real x1_, Real x2_, Real y1_, Real y2_)
      : x1(std::move(x1_)), x2(std::move(x2_)), y1(std::move(y1_)), y2(std::move(y2_)) {
    if (!(x1 < x2) || !(y1 < y2)) throw DomainError("rectangle requires x1 < x2, y1 < y2");
  }
};

struct PointOrder {
  Complex location;
  unsigned order = 1;
};

// f: analytic and non-zero on the contour, meromorphic inside, with its
// zeros and poles declared (strictly inside or strictly outside).
struct MeromorphicSpec {
  std::function<Complex(const Complex&)> evaluate;
  std::vector<PointOrder> zeros;
  std::vector<PointOrder> poles;
};

struct KernelPole {
  Complex location;
  unsigned order = 1;
  // principal-part coefficients g_{-1}, g_{-2}, ..., g_{-order};
  // empty: computed numerically from the evaluator.
  std::vector<Complex> principal;
};

// g: analytic on the contour, meromorphic inside; poles disjoint from the
// zeros and poles of f.
struct KernelSpec {
  std::function<Complex(const Complex&)> evaluate;
  std::vector<KernelPole> poles;
};

struct LittlewoodOptions {
  bool apply_jumps = true;  // negative control switches the +-2 pi corrections off
  Real quad_tol = Real(0.0);  // 0: derived from the precision context
};

// Counterclockwise contour integral of log(f) * g with the branch of log f
// continued horizontally from the right edge; crossing an interior zero or
// pole of f adds +-2 pi (order) to the argument on the left edge.
Complex lhs_contour_integral(const MeromorphicSpec& f, const KernelSpec& g,
                             const RectContour& c, const PrecisionContext& ctx,
                             const LittlewoodOptions& opts = {});

// 2 pi i ( sum res(g F) at g-poles  -  sum_zeros m * int g  +  sum_poles l * int g ),
// the horizontal integrals running from x1 + iY to the zero/pole.
Complex rhs_sum(const MeromorphicSpec& f, const KernelSpec& g, const RectContour& c,
                const PrecisionContext& ctx);

struct VerifyResult {
  Complex lhs, rhs;
  Real residual;
  Real tolerance;
  bool pass;
};

VerifyResult verify(const MeromorphicSpec& f, const KernelSpec& g, const RectContour& c,
                    const PrecisionContext& ctx, const Real& tolerance,
                    const LittlewoodOptions& opts = {});

// --- built-in zoo ---------------------------------------------------------

// f(z) = prod (z - z_i)^{m_i} / prod (z - p_j)^{l_j}
MeromorphicSpec make_product_spec(std::vector<PointOrder> zeros,
                                  std::vector<PointOrder> poles, mpfr_prec_t prec);

// f = xi with zeros taken from the catalog; the rectangle must stay below
// the catalog height.
MeromorphicSpec make_xi_spec(const ZeroCatalog& cat, const RectContour& c,
                             const PrecisionContext& ctx);

KernelSpec make_simple_pole_kernel(const Complex& pole);

// g(z) = numerator(z) / prod (z - p_j)^{o_j}; principal parts found numerically.
KernelSpec make_rational_kernel(std::vector<Complex> numerator_coeffs,
                                std::vector<KernelPole> poles, mpfr_prec_t prec);

// The Li-criterion kernel
//   g(z) = -n(2a-1)(z-a)^{n-1}/(z+a-1)^{n+1} + n(2a-1)/(z+a-1)^2
// with its analytic principal part at z = 1-a.
KernelSpec make_li_kernel(unsigned n, const Real& a, mpfr_prec_t prec);

// --- JSON case files ------------------------------------------------------

struct CaseOutcome {
  std::string name;
  Complex lhs, rhs;
  Real residual;
  Real tolerance;
  bool expect_fail = false;
  bool residual_ok = false;  // residual <= tolerance
  bool pass = false;         // residual_ok XOR expect_fail
};

// Runs a JSON description: function tag {polynomial, rational, xi},
// kernel tag {simple_pole, li_kernel, custom_rational}, rectangle,
// tolerance, optional disable_jumps / expect_fail.  xi cases need `cat`.
std::vector<CaseOutcome> run_case_file(const std::string& path, const ZeroCatalog* cat);

}  // namespace zetali
