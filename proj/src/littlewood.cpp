#include "zetali/littlewood.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <json.hpp>

#include "zetali/errors.hpp"
#include "zetali/quadrature.hpp"
#include "zetali/special.hpp"

namespace zetali {

namespace {

bool strictly_inside(const RectContour& c, const Complex& z, const Real& margin) {
  return z.re() > c.x1 + margin && z.re() < c.x2 - margin && z.im() > c.y1 + margin &&
         z.im() < c.y2 - margin;
}

bool strictly_outside(const RectContour& c, const Complex& z, const Real& margin) {
  return z.re() < c.x1 - margin || z.re() > c.x2 + margin || z.im() < c.y1 - margin ||
         z.im() > c.y2 + margin;
}

// Piecewise branch record of log f along one straight segment.  Nodes are
// spaced so the argument moves by less than pi/2 per step; arbitrary points
// are fixed up against the linear interpolation of the recorded arguments.
struct Skeleton {
  Complex p, q;
  std::vector<double> ts;
  std::vector<double> ims;  // double is enough to pick the 2 pi k branch
  Real end_im;

  double interp_im(double t) const {
    auto it = std::upper_bound(ts.begin(), ts.end(), t);
    std::size_t hi = std::min<std::size_t>(it - ts.begin(), ts.size() - 1);
    std::size_t lo = hi == 0 ? 0 : hi - 1;
    if (ts[hi] == ts[lo]) return ims[lo];
    double w = (t - ts[lo]) / (ts[hi] - ts[lo]);
    return ims[lo] * (1.0 - w) + ims[hi] * w;
  }

  // branch-corrected log given the principal log at a point of the segment
  Complex fix(const Complex& z, const Complex& principal, mpfr_prec_t wp) const {
    Complex d = q - p;
    double t = (((z - p) * d.conj()).re() / d.norm()).to_double();
    t = std::clamp(t, 0.0, 1.0);
    double ref = interp_im(t);
    double pim = principal.im().to_double();
    double k = std::round((ref - pim) / (2.0 * M_PI));
    if (std::abs(pim + 2.0 * M_PI * k - ref) > 2.6)
      throw QuadratureError("branch skeleton too coarse for query");
    if (k == 0.0) return principal;
    Real kk(k, wp);
    return Complex(principal.re(),
                   principal.im() + kk * Real(2.0, wp) * Real::pi(wp));
  }
};

struct Walker {
  const std::function<Complex(const Complex&)>& f;
  mpfr_prec_t wp;
  Real guard;

  Complex log_at(const Complex& z) const {
    Complex v = f(z);
    if (v.abs() < guard)
      throw BoundaryZeroError(
          "|f| below guard on the contour; shift the rectangle to avoid the zero/pole");
    return log(v);
  }

  // Walks p -> q keeping per-step argument change < pi/2.  start_im is the
  // unwrapped Im log f at p (continuation anchor).
  Skeleton walk(const Complex& p, const Complex& q, const Real& start_im) const {
    Skeleton sk;
    sk.p = p;
    sk.q = q;
    Complex lg = log_at(p);
    double k0 = std::round((start_im - lg.im()).to_double() / (2.0 * M_PI));
    Real im = lg.im() + Real(k0, wp) * Real(2.0, wp) * Real::pi(wp);
    if (abs(im - start_im) > Real(0.5))
      throw QuadratureError("branch anchor mismatch at segment start");
    sk.ts.push_back(0.0);
    sk.ims.push_back(im.to_double());

    const double min_step = 1.0 / (1 << 22);
    double t = 0.0;
    double step = 1.0 / 64.0;
    double prev_im_d = im.to_double();
    Real prev_im = im;
    while (t < 1.0) {
      double tn = std::min(1.0, t + step);
      Complex z = p + Real(tn, wp) * (q - p);
      Complex lgn = log_at(z);
      // principal delta normalized to (-pi, pi]
      double d = lgn.im().to_double() - std::fmod(prev_im_d, 2.0 * M_PI);
      d = std::remainder(d, 2.0 * M_PI);
      if (std::abs(d) > M_PI / 2.0 && tn - t > min_step) {
        step /= 2.0;
        if (step < min_step)
          throw BoundaryZeroError("argument varies too fast; zero/pole on or near the contour");
        continue;
      }
      double k = std::round((prev_im_d + d - lgn.im().to_double()) / (2.0 * M_PI));
      Real imn = lgn.im() + Real(k, wp) * Real(2.0, wp) * Real::pi(wp);
      t = tn;
      prev_im_d = imn.to_double();
      prev_im = imn;
      sk.ts.push_back(t);
      sk.ims.push_back(prev_im_d);
      step = std::min(std::min(step * 1.5, 1.0 / 16.0), 1.0 - t + min_step);
    }
    sk.end_im = prev_im;
    return sk;
  }
};

struct Geometry {
  std::vector<PointOrder> in_zeros, in_poles;  // strictly inside
  std::vector<double> levels;                  // their ordinates, descending
};

Geometry validate(const MeromorphicSpec& f, const KernelSpec& g, const RectContour& c) {
  Real margin = Real::two_pow(-20) * max(Real(1.0), max(c.x2 - c.x1, c.y2 - c.y1));
  Geometry geo;
  auto classify = [&](const std::vector<PointOrder>& pts, std::vector<PointOrder>& inside,
                      const char* what) {
    for (const auto& p : pts) {
      if (strictly_inside(c, p.location, margin)) {
        inside.push_back(p);
      } else if (!strictly_outside(c, p.location, margin)) {
        throw DomainError(std::string(what) +
                          " lies on the contour; shift the rectangle a bit");
      }
    }
  };
  classify(f.zeros, geo.in_zeros, "zero of f");
  classify(f.poles, geo.in_poles, "pole of f");

  for (const auto& gp : g.poles) {
    if (!strictly_inside(c, gp.location, margin) && !strictly_outside(c, gp.location, margin))
      throw DomainError("pole of g lies on the contour; shift the rectangle a bit");
    for (const auto& fz : f.zeros)
      if ((gp.location - fz.location).abs() < Real(1e-12))
        throw DomainError("poles of g must not coincide with zeros of f");
    for (const auto& fp : f.poles)
      if ((gp.location - fp.location).abs() < Real(1e-12))
        throw DomainError("poles of g must not coincide with poles of f");
  }

  for (const auto& p : geo.in_zeros) geo.levels.push_back(p.location.im().to_double());
  for (const auto& p : geo.in_poles) geo.levels.push_back(p.location.im().to_double());
  std::sort(geo.levels.begin(), geo.levels.end(), std::greater<double>());
  geo.levels.erase(std::unique(geo.levels.begin(), geo.levels.end()), geo.levels.end());
  return geo;
}

// + 2 pi (orders of poles above y) - 2 pi (orders of zeros above y)
Real jump_at(const Geometry& geo, double y, mpfr_prec_t wp) {
  long units = 0;
  for (const auto& z : geo.in_zeros)
    if (z.location.im().to_double() > y) units -= static_cast<long>(z.order);
  for (const auto& p : geo.in_poles)
    if (p.location.im().to_double() > y) units += static_cast<long>(p.order);
  return Real::si(units, wp) * Real(2.0, wp) * Real::pi(wp);
}

Real quad_tolerance(const PrecisionContext& ctx, const LittlewoodOptions& opts) {
  if (!opts.quad_tol.is_zero()) return opts.quad_tol;
  return ctx.target_abs_error;
}

}  // namespace

Complex lhs_contour_integral(const MeromorphicSpec& f, const KernelSpec& g,
                             const RectContour& c, const PrecisionContext& ctx,
                             const LittlewoodOptions& opts) {
  Geometry geo = validate(f, g, c);
  mpfr_prec_t wp = ctx.work_prec();
  Walker walker{f.evaluate, wp, Real::two_pow(-(wp / 2), wp)};

  Complex br(c.x2.with_prec(wp), c.y1.with_prec(wp));
  Complex tr(c.x2.with_prec(wp), c.y2.with_prec(wp));
  Complex tl(c.x1.with_prec(wp), c.y2.with_prec(wp));
  Complex bl(c.x1.with_prec(wp), c.y1.with_prec(wp));

  // particular determination: principal log at the bottom-right corner
  Real start_im = walker.log_at(br).im();
  Skeleton right = walker.walk(br, tr, start_im);
  Skeleton top = walker.walk(tr, tl, right.end_im);
  Skeleton left = walker.walk(tl, bl, top.end_im);
  Skeleton bottom = walker.walk(br, bl, start_im);

  if (opts.apply_jumps) {
    // continuation consistency: going down the left edge with jumps applied
    // must land on the bottom-edge branch at the bottom-left corner
    Real defect = abs(bottom.end_im - (left.end_im + jump_at(geo, c.y1.to_double(), wp)));
    if (defect > Real(0.5))
      throw QuadratureError("branch tracking inconsistency across the contour");
  }

  Real tol = quad_tolerance(ctx, opts) * Real(0.1);
  Real edge_tol = tol * Real(0.25);

  auto integrand = [&](const Skeleton& sk, const Real& jump) {
    return [&walker, &sk, &jump, &g, wp](const Complex& z) {
      Complex F = sk.fix(z, walker.log_at(z), wp);
      if (!jump.is_zero()) F = Complex(F.re(), F.im() + jump);
      return F * g.evaluate(z);
    };
  };

  const Real zero(0.0, wp);
  Complex total(zero, zero);
  total += integrate_segment(integrand(right, zero), br, tr, edge_tol, wp);
  total += integrate_segment(integrand(top, zero), tr, tl, edge_tol, wp);

  // left edge, split at interior ordinate levels, traversed downward
  double ylo = c.y1.to_double(), yhi = c.y2.to_double();
  std::vector<double> cuts;
  for (double lv : geo.levels)
    if (lv > ylo && lv < yhi) cuts.push_back(lv);
  double prev = yhi;
  auto x1w = c.x1.with_prec(wp);
  for (std::size_t i = 0; i <= cuts.size(); ++i) {
    double next = (i < cuts.size()) ? cuts[i] : ylo;
    Real jump = opts.apply_jumps ? jump_at(geo, 0.5 * (prev + next), wp) : Real(0.0, wp);
    Complex a(x1w, Real(prev, wp));
    Complex b(x1w, Real(next, wp));
    total += integrate_segment(integrand(left, jump), a, b, edge_tol, wp);
    prev = next;
  }

  total += integrate_segment(integrand(bottom, zero), bl, br, edge_tol, wp);
  return total;
}

namespace {

// F(rho) by horizontal continuation from the right edge, plus local Taylor
// coefficients of log f (branch-free for k >= 1) up to order-1 terms.
std::vector<Complex> f_jet(const MeromorphicSpec& f, const Geometry& geo,
                           const RectContour& c, const Complex& rho, unsigned order,
                           const Walker& walker, const Skeleton& right, mpfr_prec_t wp) {
  double y = rho.im().to_double();
  for (const auto& z : geo.in_zeros) {
    if (std::abs(z.location.im().to_double() - y) < 1e-9 &&
        z.location.re().to_double() > rho.re().to_double())
      throw DomainError("g-pole shares an ordinate with a zero of f to its right; "
                        "nudge the configuration");
  }
  for (const auto& p : geo.in_poles) {
    if (std::abs(p.location.im().to_double() - y) < 1e-9 &&
        p.location.re().to_double() > rho.re().to_double())
      throw DomainError("g-pole shares an ordinate with a pole of f to its right; "
                        "nudge the configuration");
  }

  Complex edge_pt(c.x2.with_prec(wp), rho.im().with_prec(wp));
  Real im0 = right.fix(edge_pt, walker.log_at(edge_pt), wp).im();
  Skeleton horiz = walker.walk(edge_pt, rho, im0);
  Complex F0(walker.log_at(rho).re(), horiz.end_im);

  std::vector<Complex> jet;
  jet.push_back(F0);
  if (order >= 2) {
    Real dist(wp);
    mpfr_set_inf(dist.raw(), 1);
    for (const auto& z : geo.in_zeros) dist = min(dist, (z.location - rho).abs());
    for (const auto& p : geo.in_poles) dist = min(dist, (p.location - rho).abs());
    for (const auto& z : f.zeros) dist = min(dist, (z.location - rho).abs());
    for (const auto& p : f.poles) dist = min(dist, (p.location - rho).abs());
    Real radius = min(Real(0.45, wp) * dist, Real(1.0, wp));
    auto fe = [&](const Complex& z) {
      Complex v = f.evaluate(z);
      return Evaluated{v, v.abs() * Real::two_pow(-(wp - 16), wp)};
    };
    CircleSeries cs = log_taylor_on_circle(fe, rho, radius, order - 1,
                                           Real::two_pow(-(wp / 2), wp), wp, false);
    for (unsigned k = 1; k < order; ++k) jet.push_back(cs.coeffs[k]);
  }
  return jet;
}

std::vector<Complex> principal_part(const KernelSpec& g, const KernelPole& gp,
                                    const Geometry& geo, const MeromorphicSpec& f,
                                    mpfr_prec_t wp) {
  if (!gp.principal.empty()) {
    if (gp.principal.size() != gp.order)
      throw DomainError("principal part must list g_{-1}..g_{-order}");
    return gp.principal;
  }
  // numeric Laurent coefficients: H(z) = g(z) * (z - z0)^order is analytic;
  // g_{-m} = Taylor coefficient (order - m) of H.
  Real dist(wp);
  mpfr_set_inf(dist.raw(), 1);
  for (const auto& z : f.zeros) dist = min(dist, (z.location - gp.location).abs());
  for (const auto& p : f.poles) dist = min(dist, (p.location - gp.location).abs());
  for (const auto& other : g.poles)
    if (&other != &gp) dist = min(dist, (other.location - gp.location).abs());
  Real radius = min(Real(0.5, wp) * dist, Real(0.5, wp));
  (void)geo;

  auto H = [&](const Complex& z) {
    return g.evaluate(z) * pow_int(z - gp.location, static_cast<long>(gp.order));
  };
  CircleSeries cs = taylor_on_circle_analytic(H, gp.location, radius, gp.order - 1,
                                              Real::two_pow(-(wp * 2 / 3), wp), wp);
  std::vector<Complex> out(gp.order);
  for (unsigned m = 1; m <= gp.order; ++m) out[m - 1] = cs.coeffs[gp.order - m];
  return out;
}

}  // namespace

Complex rhs_sum(const MeromorphicSpec& f, const KernelSpec& g, const RectContour& c,
                const PrecisionContext& ctx) {
  Geometry geo = validate(f, g, c);
  mpfr_prec_t wp = ctx.work_prec();
  Walker walker{f.evaluate, wp, Real::two_pow(-(wp / 2), wp)};
  Real margin = Real::two_pow(-20);

  Complex br(c.x2.with_prec(wp), c.y1.with_prec(wp));
  Complex tr(c.x2.with_prec(wp), c.y2.with_prec(wp));
  Real start_im = walker.log_at(br).im();
  Skeleton right = walker.walk(br, tr, start_im);

  const Real zero(0.0, wp);
  Complex acc(zero, zero);

  for (const auto& gp : g.poles) {
    if (!strictly_inside(c, gp.location, margin)) continue;
    std::vector<Complex> jet = f_jet(f, geo, c, gp.location.with_prec(wp), gp.order,
                                     walker, right, wp);
    std::vector<Complex> pp = principal_part(g, gp, geo, f, wp);
    for (unsigned k = 0; k < gp.order; ++k) acc += pp[k] * jet[k];
  }

  Real tol = ctx.target_abs_error * Real(0.05);
  auto gfun = [&g](const Complex& z) { return g.evaluate(z); };
  auto line_integral = [&](const PointOrder& p) {
    Complex a(c.x1.with_prec(wp), p.location.im().with_prec(wp));
    Complex b = p.location.with_prec(wp);
    for (const auto& gp : g.poles) {
      // distance from the segment to the pole must be positive
      if (std::abs(gp.location.im().to_double() - p.location.im().to_double()) < 1e-12 &&
          gp.location.re() >= c.x1 && gp.location.re() <= p.location.re())
        throw DomainError("pole of g lies on a zero/pole line of f");
    }
    return integrate_segment(gfun, a, b, tol, wp);
  };

  for (const auto& z : geo.in_zeros)
    acc -= Real::si(static_cast<long>(z.order), wp) * line_integral(z);
  for (const auto& p : geo.in_poles)
    acc += Real::si(static_cast<long>(p.order), wp) * line_integral(p);

  Complex two_pi_i(Real(0.0, wp), Real(2.0, wp) * Real::pi(wp));
  return two_pi_i * acc;
}

VerifyResult verify(const MeromorphicSpec& f, const KernelSpec& g, const RectContour& c,
                    const PrecisionContext& ctx, const Real& tolerance,
                    const LittlewoodOptions& opts) {
  LittlewoodOptions o = opts;
  if (o.quad_tol.is_zero()) o.quad_tol = max(ctx.target_abs_error, tolerance * Real(1.0 / 32));
  Complex lhs = lhs_contour_integral(f, g, c, ctx, o);
  Complex rhs = rhs_sum(f, g, c, ctx);
  Real residual = (lhs - rhs).abs();
  return VerifyResult{lhs, rhs, residual, tolerance, residual <= tolerance};
}

MeromorphicSpec make_product_spec(std::vector<PointOrder> zeros,
                                  std::vector<PointOrder> poles, mpfr_prec_t prec) {
  MeromorphicSpec spec;
  spec.zeros = std::move(zeros);
  spec.poles = std::move(poles);
  spec.evaluate = [zs = spec.zeros, ps = spec.poles, prec](const Complex& z) {
    Complex acc(Real(1.0, prec), Real(0.0, prec));
    Complex zz = z.with_prec(prec);
    for (const auto& w : zs) acc *= pow_int(zz - w.location, static_cast<long>(w.order));
    for (const auto& w : ps) acc = acc / pow_int(zz - w.location, static_cast<long>(w.order));
    return acc;
  };
  return spec;
}

MeromorphicSpec make_xi_spec(const ZeroCatalog& cat, const RectContour& c,
                             const PrecisionContext& ctx) {
  double ymax = std::max(std::abs(c.y1.to_double()), std::abs(c.y2.to_double()));
  if (Real(ymax) > cat.t_max() + Real(1.0))
    throw DomainError("rectangle extends above the catalog height");

  MeromorphicSpec spec;
  PrecisionContext inner(ctx.work_prec(), ctx.target_abs_error * Real::two_pow(-24));
  spec.evaluate = [inner](const Complex& z) { return xi(z, inner); };
  const Real half(0.5, ZeroCatalog::kParsePrec);
  for (const auto& e : cat.entries()) {
    if (e.ordinate.to_double() > ymax + 1.0) break;
    spec.zeros.push_back(PointOrder{Complex(half, e.ordinate), e.multiplicity});
    spec.zeros.push_back(PointOrder{Complex(half, -e.ordinate), e.multiplicity});
  }
  return spec;
}

KernelSpec make_simple_pole_kernel(const Complex& pole) {
  KernelSpec g;
  g.evaluate = [pole](const Complex& z) { return inv(z - pole); };
  g.poles.push_back(KernelPole{pole, 1, {Complex(Real(1.0, pole.prec()), Real(0.0, pole.prec()))}});
  return g;
}

KernelSpec make_rational_kernel(std::vector<Complex> numerator_coeffs,
                                std::vector<KernelPole> poles, mpfr_prec_t prec) {
  KernelSpec g;
  g.poles = poles;
  g.evaluate = [num = std::move(numerator_coeffs), poles, prec](const Complex& z) {
    Complex zz = z.with_prec(prec);
    Complex n(Real(0.0, prec), Real(0.0, prec));
    for (std::size_t i = num.size(); i-- > 0;) n = n * zz + num[i];
    Complex d(Real(1.0, prec), Real(0.0, prec));
    for (const auto& p : poles) d *= pow_int(zz - p.location, static_cast<long>(p.order));
    return n / d;
  };
  return g;
}

KernelSpec make_li_kernel(unsigned n, const Real& a, mpfr_prec_t prec) {
  if (n == 0) throw DomainError("li kernel requires n >= 1");
  Real aa = a.with_prec(prec);
  Real b = Real(1.0, prec) - Real(2.0, prec) * aa;  // 1 - 2a
  Complex center(Real(1.0, prec) - aa);             // pole at 1 - a
  Real nn(static_cast<long>(n), prec);

  KernelSpec g;
  g.evaluate = [aa, n, nn, prec](const Complex& z) {
    Complex zz = z.with_prec(prec);
    Complex za = zz - Complex(aa);
    Complex zb = zz + Complex(aa - Real(1.0, prec));
    Complex m2a1(Real(2.0, prec) * aa - Real(1.0, prec));
    Complex first = Complex(-nn) * m2a1 * pow_int(za, static_cast<long>(n) - 1) /
                    pow_int(zb, static_cast<long>(n) + 1);
    Complex second = Complex(nn) * m2a1 / (zb * zb);
    return first + second;
  };

  // principal part at 1-a:  n(1-2a) C(n-1,j) (1-2a)^{n-1-j} at power -(n+1-j),
  // and an extra -n(1-2a) at power -2.
  KernelPole pole;
  pole.location = center;
  pole.order = n + 1;
  std::vector<Complex> pp(n + 1, Complex(Real(0.0, prec), Real(0.0, prec)));
  Real binom(1.0, prec);  // C(n-1, j)
  Real b_pow(1.0, prec);  // (1-2a)^j ... built ascending in j
  // g_{-(n+1-j)} needs (1-2a)^{n-1-j}; iterate j descending for ascending powers
  for (long j = static_cast<long>(n) - 1; j >= 0; --j) {
    Real cnj(prec);
    mpz_t bz;
    mpz_init(bz);
    mpz_bin_uiui(bz, n - 1, static_cast<unsigned long>(j));
    mpfr_set_z(cnj.raw(), bz, MPFR_RNDN);
    mpz_clear(bz);
    unsigned idx = static_cast<unsigned>(n) - static_cast<unsigned>(j);  // m = n+1-j -> pp[m-1]
    pp[idx] += Complex(nn * b * cnj * b_pow);
    b_pow *= b;
  }
  pp[1] += Complex(-nn * b);  // g_{-2} from the added regularizing term
  pole.principal = std::move(pp);
  g.poles.push_back(std::move(pole));
  return g;
}

namespace {

using nlohmann::json;

Real json_real(const json& j, mpfr_prec_t prec) {
  if (j.is_string()) return Real::from_string(j.get<std::string>(), prec);
  return Real(j.get<double>(), prec);
}

Complex json_complex(const json& j, mpfr_prec_t prec) {
  return Complex(json_real(j.at("re"), prec),
                 j.contains("im") ? json_real(j.at("im"), prec) : Real(0.0, prec));
}

std::vector<PointOrder> json_points(const json& j, mpfr_prec_t prec) {
  std::vector<PointOrder> out;
  if (!j.is_array()) return out;
  for (const auto& e : j) {
    unsigned order = e.contains("order") ? e.at("order").get<unsigned>() : 1;
    out.push_back(PointOrder{json_complex(e, prec), order});
  }
  return out;
}

}  // namespace

std::vector<CaseOutcome> run_case_file(const std::string& path, const ZeroCatalog* cat) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open case file: " + path);
  json doc = json::parse(in);

  std::vector<CaseOutcome> out;
  for (const auto& jc : doc.at("cases")) {
    mpfr_prec_t bits = jc.contains("bits") ? jc.at("bits").get<long>() : 128;
    PrecisionContext ctx = PrecisionContext::bits(bits);
    mpfr_prec_t wp = ctx.work_prec();

    RectContour rect(json_real(jc.at("rect").at("x1"), wp), json_real(jc.at("rect").at("x2"), wp),
                     json_real(jc.at("rect").at("y1"), wp), json_real(jc.at("rect").at("y2"), wp));

    const json& jf = jc.at("f");
    std::string fkind = jf.at("kind").get<std::string>();
    MeromorphicSpec f;
    if (fkind == "polynomial") {
      f = make_product_spec(json_points(jf.value("zeros", json::array()), wp), {}, wp);
    } else if (fkind == "rational") {
      f = make_product_spec(json_points(jf.value("zeros", json::array()), wp),
                            json_points(jf.value("poles", json::array()), wp), wp);
    } else if (fkind == "xi") {
      if (cat == nullptr) throw Error("xi case requires a zero table");
      f = make_xi_spec(*cat, rect, ctx);
    } else {
      throw Error("unknown function kind: " + fkind);
    }

    const json& jg = jc.at("g");
    std::string gkind = jg.at("kind").get<std::string>();
    KernelSpec g;
    if (gkind == "simple_pole") {
      g = make_simple_pole_kernel(json_complex(jg.at("pole"), wp));
    } else if (gkind == "li_kernel") {
      g = make_li_kernel(jg.at("n").get<unsigned>(), json_real(jg.at("a"), wp), wp);
    } else if (gkind == "custom_rational") {
      std::vector<Complex> num;
      for (const auto& e : jg.at("numerator")) num.push_back(json_complex(e, wp));
      std::vector<KernelPole> poles;
      for (const auto& e : jg.at("poles")) {
        unsigned order = e.contains("order") ? e.at("order").get<unsigned>() : 1;
        poles.push_back(KernelPole{json_complex(e, wp), order, {}});
      }
      g = make_rational_kernel(std::move(num), std::move(poles), wp);
    } else {
      throw Error("unknown kernel kind: " + gkind);
    }

    LittlewoodOptions opts;
    opts.apply_jumps = !jc.value("disable_jumps", false);
    Real tolerance = json_real(jc.at("tolerance"), wp);

    CaseOutcome oc;
    oc.name = jc.value("name", std::string("case-") + std::to_string(out.size()));
    oc.tolerance = tolerance;
    oc.expect_fail = jc.value("expect_fail", false);
    VerifyResult r = verify(f, g, rect, ctx, tolerance, opts);
    oc.lhs = r.lhs;
    oc.rhs = r.rhs;
    oc.residual = r.residual;
    oc.residual_ok = r.pass;
    oc.pass = oc.expect_fail ? !r.pass : r.pass;
    out.push_back(std::move(oc));
  }
  return out;
}

}  // namespace zetali
