#include "zetali/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <utility>

#include "zetali/errors.hpp"

namespace zetali {

namespace {

GLRule make_rule(unsigned n, mpfr_prec_t prec) {
  GLRule rule;
  rule.nodes.reserve(n);
  rule.weights.reserve(n);
  const Real one(1.0, prec);
  const Real tol = Real::two_pow(-(prec - 6), prec);
  for (unsigned i = 0; i < n; ++i) {
    // Newton from the Chebyshev-like seed; converges in a handful of steps.
    double seed = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    Real x(seed, prec);
    Real dpn(prec);
    for (int it = 0; it < 80; ++it) {
      Real p0(1.0, prec), p1 = x;
      for (unsigned k = 2; k <= n; ++k) {
        Real p2 = (Real(2.0 * k - 1.0, prec) * x * p1 - Real::si(static_cast<long>(k - 1), prec) * p0) /
                  Real::si(static_cast<long>(k), prec);
        p0 = p1;
        p1 = p2;
      }
      dpn = Real::si(static_cast<long>(n), prec) * (x * p1 - p0) / (x * x - one);
      Real dx = p1 / dpn;
      x -= dx;
      if (abs(dx) < tol) break;
    }
    rule.nodes.push_back(x);
    rule.weights.push_back(Real(2.0, prec) / ((one - x * x) * dpn * dpn));
  }
  return rule;
}

std::map<std::pair<unsigned, mpfr_prec_t>, GLRule>& rule_cache() {
  static std::map<std::pair<unsigned, mpfr_prec_t>, GLRule> m;
  return m;
}
std::mutex rule_mu;

Complex gl_apply(const std::function<Complex(const Complex&)>& fn,
                 const Complex& z0, const Complex& z1, const GLRule& r,
                 mpfr_prec_t prec) {
  Complex mid = (z0 + z1) * Real(0.5, prec);
  Complex half = (z1 - z0) * Real(0.5, prec);
  Complex acc(Real(0.0, prec), Real(0.0, prec));
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    acc += r.weights[i] * fn(mid + r.nodes[i] * half);
  }
  return acc * half;
}

Complex integrate_rec(const std::function<Complex(const Complex&)>& fn,
                      const Complex& z0, const Complex& z1, const Complex& whole,
                      const Real& tol, const GLRule& r, mpfr_prec_t prec,
                      int depth, Real* err_out) {
  Complex mid = (z0 + z1) * Real(0.5, prec);
  Complex left = gl_apply(fn, z0, mid, r, prec);
  Complex right = gl_apply(fn, mid, z1, r, prec);
  Real defect = (left + right - whole).abs();
  if (defect <= tol) {
    if (err_out) *err_out += defect;
    return left + right;
  }
  if (depth <= 0) throw QuadratureError("adaptive quadrature did not converge");
  Real half_tol = tol * Real(0.5, prec);
  return integrate_rec(fn, z0, mid, left, half_tol, r, prec, depth - 1, err_out) +
         integrate_rec(fn, mid, z1, right, half_tol, r, prec, depth - 1, err_out);
}

}  // namespace

const GLRule& gauss_legendre(unsigned n, mpfr_prec_t prec) {
  std::lock_guard<std::mutex> lock(rule_mu);
  auto key = std::make_pair(n, prec);
  auto it = rule_cache().find(key);
  if (it == rule_cache().end()) {
    it = rule_cache().emplace(key, make_rule(n, prec)).first;
  }
  return it->second;
}

Complex integrate_segment(const std::function<Complex(const Complex&)>& fn,
                          const Complex& z0, const Complex& z1, const Real& tol,
                          mpfr_prec_t prec, int max_depth, Real* err_out) {
  const GLRule& r = gauss_legendre(20, prec);
  Complex whole = gl_apply(fn, z0, z1, r, prec);
  return integrate_rec(fn, z0, z1, whole, tol, r, prec, max_depth, err_out);
}

namespace {

// One trapezoidal pass: returns c_0..c_K plus the unwrapped log values.
struct CirclePass {
  std::vector<Complex> coeffs;
  Real max_node_err;
};

CirclePass circle_pass_log(const std::function<Evaluated(const Complex&)>& f,
                           const Complex& center, const Real& radius, unsigned K,
                           unsigned M, mpfr_prec_t prec, bool conj_symmetric) {
  const Real pi = Real::pi(prec);
  const Real two_pi = Real(2.0, prec) * pi;
  const unsigned half = M / 2;
  const unsigned count = conj_symmetric ? half + 1 : M;

  std::vector<Complex> logs;
  logs.reserve(count);
  Real max_err(0.0, prec);
  Real prev_im(0.0, prec);
  for (unsigned j = 0; j < count; ++j) {
    Real phi = two_pi * Real::si(static_cast<long>(j), prec) / Real::si(static_cast<long>(M), prec);
    Real c(prec), s(prec);
    mpfr_sin_cos(s.raw(), c.raw(), phi.raw(), MPFR_RNDN);
    Complex z = center + Complex(radius * c, radius * s);
    Evaluated ev = f(z);
    Real av = ev.value.abs();
    if (av.is_zero() || ev.error_bound * Real(4.0) > av)
      throw QuadratureError("function value indistinguishable from zero on circle");
    Complex lg = log(ev.value);
    Real node_err = ev.error_bound / av + Real::two_pow(-(prec - 4), prec);
    if (node_err > max_err) max_err = node_err;
    if (j > 0) {
      // unwrap: keep the imaginary part within pi of the previous node
      Real d = lg.im() - prev_im;
      Real k = floor(d / two_pi + Real(0.5, prec));
      if (!k.is_zero()) lg = Complex(lg.re(), lg.im() - k * two_pi);
      if (abs(lg.im() - prev_im) > pi * Real(0.5, prec))
        throw QuadratureError("argument step exceeds pi/2 on circle; increase nodes");
    }
    prev_im = lg.im();
    logs.push_back(lg);
  }

  if (conj_symmetric) {
    // real center and conjugate symmetry: branch must be real at phi = pi
    if (abs(logs[half].im()) > pi * Real(0.5, prec))
      throw QuadratureError("branch fails to close on half circle");
  } else {
    // closing the loop: total winding must vanish
    Real d = logs[0].im() - prev_im;
    Real k = floor(d / two_pi + Real(0.5, prec));
    Real defect = abs(d - k * two_pi);
    if (!k.is_zero())
      throw QuadratureError("nonzero winding on circle: encloses a zero or pole");
    if (defect > pi * Real(0.5, prec))
      throw QuadratureError("branch fails to close on circle");
  }

  CirclePass out;
  out.max_node_err = max_err;
  out.coeffs.assign(K + 1, Complex(Real(0.0, prec), Real(0.0, prec)));
  const Real zero(0.0, prec);

  if (conj_symmetric) {
    // c_k = (1/(M r^k)) [F_0 + (-1)^k F_{M/2} + sum 2 Re(F_j e^{-ik phi_j})]
    std::vector<Real> acc(K + 1, zero);
    for (unsigned k = 0; k <= K; ++k) acc[k] = logs[0].re();
    for (unsigned j = 1; j < half; ++j) {
      Real phi = two_pi * Real::si(static_cast<long>(j), prec) / Real::si(static_cast<long>(M), prec);
      Real c(prec), s(prec);
      mpfr_sin_cos(s.raw(), c.raw(), phi.raw(), MPFR_RNDN);
      Complex w(c, -s);  // e^{-i phi_j}
      Complex p(Real(1.0, prec), Real(0.0, prec));
      const Complex& F = logs[j];
      for (unsigned k = 0; k <= K; ++k) {
        acc[k] += Real(2.0, prec) * (F.re() * p.re() - F.im() * p.im());
        p *= w;
      }
    }
    for (unsigned k = 0; k <= K; ++k) {
      Real v = acc[k] + ((k & 1) ? -logs[half].re() : logs[half].re());
      // F at phi = pi is real up to rounding; its imaginary part only
      // contributes at odd k where the mirror cancels it exactly.
      v /= Real::si(static_cast<long>(M), prec);
      v /= pow_si(radius, static_cast<long>(k));
      out.coeffs[k] = Complex(v, zero);
    }
  } else {
    for (unsigned j = 0; j < M; ++j) {
      Real phi = two_pi * Real::si(static_cast<long>(j), prec) / Real::si(static_cast<long>(M), prec);
      Real c(prec), s(prec);
      mpfr_sin_cos(s.raw(), c.raw(), phi.raw(), MPFR_RNDN);
      Complex w(c, -s);
      Complex p(Real(1.0, prec), Real(0.0, prec));
      const Complex& F = logs[j];
      for (unsigned k = 0; k <= K; ++k) {
        out.coeffs[k] += F * p;
        p *= w;
      }
    }
    for (unsigned k = 0; k <= K; ++k) {
      out.coeffs[k] = out.coeffs[k] / Real::si(static_cast<long>(M), prec);
      out.coeffs[k] = out.coeffs[k] / pow_si(radius, static_cast<long>(k));
    }
  }
  return out;
}

}  // namespace

CircleSeries log_taylor_on_circle(
    const std::function<Evaluated(const Complex&)>& f, const Complex& center,
    const Real& radius, unsigned K, const Real& target_err, mpfr_prec_t prec,
    bool conj_symmetric, unsigned m_start) {
  if (!(radius > Real(0.0))) throw QuadratureError("radius must be positive");
  unsigned M = 64;
  while (M < 4 * (K + 1)) M *= 2;
  while (M < m_start) M *= 2;

  CirclePass prev = circle_pass_log(f, center, radius, K, M, prec, conj_symmetric);
  for (;;) {
    unsigned M2 = M * 2;
    if (M2 > (1u << 15)) throw QuadratureError("circle quadrature did not converge");
    CirclePass cur = circle_pass_log(f, center, radius, K, M2, prec, conj_symmetric);
    Real worst(0.0, prec);
    for (unsigned k = 0; k <= K; ++k) {
      Real d = (cur.coeffs[k] - prev.coeffs[k]).abs();
      if (d > worst) worst = d;
    }
    if (worst <= target_err) {
      CircleSeries out;
      out.center = center;
      out.nodes = M2;
      out.coeffs = std::move(cur.coeffs);
      out.error_bounds.reserve(K + 1);
      for (unsigned k = 0; k <= K; ++k) {
        Real d = (k < prev.coeffs.size()) ? (out.coeffs[k] - prev.coeffs[k]).abs()
                                          : Real(0.0, prec);
        out.error_bounds.push_back(d + cur.max_node_err / pow_si(radius, static_cast<long>(k)));
      }
      return out;
    }
    prev = std::move(cur);
    M = M2;
  }
}

CircleSeries taylor_on_circle_analytic(
    const std::function<Complex(const Complex&)>& f, const Complex& center,
    const Real& radius, unsigned K, const Real& target_err, mpfr_prec_t prec) {
  const Real pi = Real::pi(prec);
  const Real two_pi = Real(2.0, prec) * pi;
  unsigned M = 64;
  while (M < 4 * (K + 1)) M *= 2;
  std::vector<Complex> prev;
  for (;;) {
    std::vector<Complex> coeffs(K + 1, Complex(Real(0.0, prec), Real(0.0, prec)));
    for (unsigned j = 0; j < M; ++j) {
      Real phi = two_pi * Real::si(static_cast<long>(j), prec) / Real::si(static_cast<long>(M), prec);
      Real c(prec), s(prec);
      mpfr_sin_cos(s.raw(), c.raw(), phi.raw(), MPFR_RNDN);
      Complex z = center + Complex(radius * c, radius * s);
      Complex F = f(z);
      Complex w(c, -s);
      Complex p(Real(1.0, prec), Real(0.0, prec));
      for (unsigned k = 0; k <= K; ++k) {
        coeffs[k] += F * p;
        p *= w;
      }
    }
    for (unsigned k = 0; k <= K; ++k) {
      coeffs[k] = coeffs[k] / Real::si(static_cast<long>(M), prec);
      coeffs[k] = coeffs[k] / pow_si(radius, static_cast<long>(k));
    }
    if (!prev.empty()) {
      Real worst(0.0, prec);
      for (unsigned k = 0; k <= K; ++k) {
        Real d = (coeffs[k] - prev[k]).abs();
        if (d > worst) worst = d;
      }
      if (worst <= target_err) {
        CircleSeries out;
        out.center = center;
        out.nodes = M;
        out.coeffs = std::move(coeffs);
        for (unsigned k = 0; k <= K; ++k) {
          out.error_bounds.push_back((out.coeffs[k] - prev[k]).abs() +
                                     Real::two_pow(-(prec - 10), prec));
        }
        return out;
      }
    }
    prev = std::move(coeffs);
    M *= 2;
    if (M > (1u << 15)) throw QuadratureError("circle quadrature did not converge");
  }
}

}  // namespace zetali
