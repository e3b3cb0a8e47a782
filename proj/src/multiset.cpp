#include "zetali/multiset.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <random>

#include <json.hpp>

#include "zetali/errors.hpp"
#include "zetali/li.hpp"

namespace zetali {

namespace {

mpfr_prec_t ms_prec(const ZMultiset& m) {
  mpfr_prec_t p = 128;
  for (const auto& e : m.elements) p = std::max(p, e.value.prec());
  return p + 64;
}

Complex pole_point(const ZMultiset& m, mpfr_prec_t wp) {
  return Complex(Real(2.0, wp) * m.sigma.with_prec(wp) - m.a.with_prec(wp));
}

}  // namespace

bool condition_i_ok(const ZMultiset& m, bool li_variant, const Real& tol) {
  mpfr_prec_t wp = ms_prec(m);
  Complex p = pole_point(m, wp);
  Complex ap(m.a.with_prec(wp));
  for (const auto& e : m.elements) {
    if ((e.value - p).abs() < tol) return false;
    if (li_variant && (e.value - ap).abs() < tol) return false;
  }
  return true;
}

ConditionIiSums condition_ii_sum(const ZMultiset& m) {
  mpfr_prec_t wp = ms_prec(m);
  const Real one(1.0, wp);
  Real primary(0.0, wp), companion(0.0, wp);
  Complex p = pole_point(m, wp);
  Complex ap(m.a.with_prec(wp));
  for (const auto& e : m.elements) {
    Real num = one + abs(e.value.re());
    Real mult(static_cast<long>(e.mult), wp);
    primary += mult * num / (one + (e.value - p).norm());
    companion += mult * num / (one + (e.value - ap).norm());
  }
  return ConditionIiSums{primary, companion};
}

std::vector<Real> bl_real_sums(const ZMultiset& m, unsigned n_max) {
  mpfr_prec_t wp = ms_prec(m);
  const Real one(1.0, wp);
  std::vector<Real> acc(n_max, Real(0.0, wp));
  for (const auto& e : m.elements) {
    Complex s = mobius_base(e.value.with_prec(wp), m.a, m.sigma);
    Real mult(static_cast<long>(e.mult), wp);
    Complex spow = s;
    for (unsigned n = 1; n <= n_max; ++n) {
      acc[n - 1] += mult * (one - spow.re());
      spow *= s;
    }
  }
  return acc;
}

Real bl_real_sum(const ZMultiset& m, unsigned n) { return bl_real_sums(m, n).back(); }

Complex bl_complex_sum(const ZMultiset& m, unsigned n) {
  mpfr_prec_t wp = ms_prec(m);
  Complex acc(Real(0.0, wp), Real(0.0, wp));
  const Complex one(Real(1.0, wp), Real(0.0, wp));
  for (const auto& e : m.elements) {
    Complex s = mobius_base(e.value.with_prec(wp), m.a, m.sigma);
    acc += Real::si(static_cast<long>(e.mult), wp) * (one - pow_int(s, static_cast<long>(n)));
  }
  return acc;
}

std::optional<unsigned> find_negativity_witness(const ZMultiset& m, unsigned n_max) {
  mpfr_prec_t wp = ms_prec(m);
  const Real one(1.0, wp), zero(0.0, wp);
  std::vector<Complex> bases, powers;
  std::vector<Real> mults;
  bases.reserve(m.elements.size());
  for (const auto& e : m.elements) {
    bases.push_back(mobius_base(e.value.with_prec(wp), m.a, m.sigma));
    powers.push_back(bases.back());
    mults.push_back(Real::si(static_cast<long>(e.mult), wp));
  }
  for (unsigned n = 1; n <= n_max; ++n) {
    Real sum(0.0, wp);
    for (std::size_t i = 0; i < bases.size(); ++i) {
      sum += mults[i] * (one - powers[i].re());
      powers[i] *= bases[i];
    }
    if (sum < zero) return n;
  }
  return std::nullopt;
}

GrowthVerdict check_growth_bound(const ZMultiset& m, const GrowthBound& gb, unsigned n_max) {
  std::vector<Real> sums = bl_real_sums(m, n_max);
  mpfr_prec_t wp = sums.empty() ? 128 : sums[0].prec();
  for (unsigned n = 1; n <= n_max; ++n) {
    Real bound = -gb.c.with_prec(wp) * exp(gb.epsilon.with_prec(wp) * Real::si(static_cast<long>(n), wp));
    if (sums[n - 1] < bound) return GrowthVerdict{false, n};
  }
  return GrowthVerdict{true, std::nullopt};
}

namespace {

// multiplicity-aware matching: each element must find an image of equal
// multiplicity within tol under the map
bool closed_under(const ZMultiset& m, const std::function<Complex(const Complex&)>& map,
                  const Real& tol) {
  for (const auto& e : m.elements) {
    Complex img = map(e.value);
    bool found = false;
    for (const auto& o : m.elements) {
      if ((o.value - img).abs() <= tol) {
        if (o.mult != e.mult) return false;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

SymmetryFlags check_symmetries(ZMultiset& m, const Real& tol) {
  SymmetryFlags flags{};
  flags.conjugate = closed_under(m, [](const Complex& z) { return z.conj(); }, tol);
  mpfr_prec_t wp = ms_prec(m);
  Real two_sigma = Real(2.0, wp) * m.sigma.with_prec(wp);
  flags.functional = closed_under(
      m, [&two_sigma](const Complex& z) { return Complex(two_sigma) - z; }, tol);
  m.conjugate_symmetric = flags.conjugate;
  m.functional_symmetric = flags.functional;
  return flags;
}

namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

ZMultiset gen_multiset(MultisetKind kind, std::uint64_t seed, unsigned count,
                       const Real& sigma, const Real& a, const GenParams& params) {
  if (count < 1) throw DomainError("count must be >= 1");
  constexpr mpfr_prec_t wp = 192;
  ZMultiset m;
  m.sigma = sigma.with_prec(wp);
  m.a = a.with_prec(wp);

  std::mt19937_64 rng(seed);
  double t_min = params.t_min.to_double();
  auto draw_t = [&]() {
    double u = uniform01(rng);
    if (u < 1e-12) u = 1e-12;
    return t_min * std::pow(u, -1.0 / params.alpha);  // Pareto tail
  };
  auto push_pair = [&](const Real& re, double t) {
    Real tt(t, wp);
    m.elements.push_back({Complex(re, tt), 1});
    m.elements.push_back({Complex(re, -tt), 1});
  };

  unsigned remaining = count;
  if (kind == MultisetKind::with_violator) {
    if (count < 4) throw DomainError("with_violator needs count >= 4");
    double t0 = 2.0 + 3.0 * uniform01(rng);
    Real off = params.offset.with_prec(wp);
    push_pair(m.sigma + off, t0);
    push_pair(m.sigma - off, t0);
    remaining -= 4;
  }

  while (remaining >= 2) {
    if (kind == MultisetKind::random_symmetric && remaining >= 4) {
      double delta = 0.05 + 0.4 * uniform01(rng);
      double t = draw_t();
      push_pair(m.sigma + Real(delta, wp), t);
      push_pair(m.sigma - Real(delta, wp), t);
      remaining -= 4;
      continue;
    }
    push_pair(m.sigma, draw_t());
    remaining -= 2;
  }
  if (remaining == 1) {
    // a single self-conjugate element on the line
    m.elements.push_back({Complex(m.sigma), 1});
  }
  return m;
}

ZMultiset load_multiset(const std::string& path, mpfr_prec_t prec) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open multiset file: " + path);
  nlohmann::json doc = nlohmann::json::parse(in);
  auto real_of = [prec](const nlohmann::json& j) {
    if (j.is_string()) return Real::from_string(j.get<std::string>(), prec);
    return Real(j.get<double>(), prec);
  };
  ZMultiset m;
  m.sigma = real_of(doc.at("sigma"));
  m.a = real_of(doc.at("a"));
  for (const auto& e : doc.at("elements")) {
    unsigned mult = e.contains("mult") ? e.at("mult").get<unsigned>() : 1;
    if (mult < 1) throw Error("multiplicity must be positive");
    m.elements.push_back({Complex(real_of(e.at("re")), real_of(e.at("im"))), mult});
  }
  return m;
}

void save_multiset(const ZMultiset& m, const std::string& path) {
  nlohmann::json doc;
  doc["schema_version"] = 1;
  doc["sigma"] = m.sigma.to_string();
  doc["a"] = m.a.to_string();
  nlohmann::json elems = nlohmann::json::array();
  for (const auto& e : m.elements) {
    elems.push_back({{"re", e.value.re().to_string()},
                     {"im", e.value.im().to_string()},
                     {"mult", e.mult}});
  }
  doc["elements"] = std::move(elems);
  std::ofstream out(path);
  if (!out) throw Error("cannot write multiset file: " + path);
  out << doc.dump(1) << "\n";
}

}  // namespace zetali
