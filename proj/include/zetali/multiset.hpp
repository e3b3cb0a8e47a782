#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zetali/complexnum.hpp"

namespace zetali {

// Finite complex multiset with the parameters of the generalized
// Bombieri-Lagarias setup.  Finite truncations stand in for the infinite
// multisets of the statements; the flags record verified symmetries.
struct ZMultiset {
  struct Elem {
    Complex value;
    unsigned mult = 1;
  };
  std::vector<Elem> elements;
  Real sigma{0.5};
  Real a{0.0};
  bool conjugate_symmetric = false;
  bool functional_symmetric = false;  // closure under rho -> 2 sigma - rho
};

// condition (i): 2 sigma - a not in R (and, for the Li variant, a not in R).
bool condition_i_ok(const ZMultiset& m, bool li_variant, const Real& tol);

struct ConditionIiSums {
  Real primary;    // sum (1 + |Re rho|) / (1 + |rho + a - 2 sigma|^2)
  Real companion;  // sum (1 + |Re rho|) / (1 + |rho - a|^2)
};
ConditionIiSums condition_ii_sum(const ZMultiset& m);

// sum mult * Re(1 - s^n) with s = (rho - a)/(rho + a - 2 sigma).
Real bl_real_sum(const ZMultiset& m, unsigned n);
std::vector<Real> bl_real_sums(const ZMultiset& m, unsigned n_max);

// Complex sum (no real part taken); for conjugate-symmetric multisets its
// imaginary part must vanish up to rounding.
Complex bl_complex_sum(const ZMultiset& m, unsigned n);

// Smallest n <= n_max with bl_real_sum(n) < 0, scanning n = 1, 2, ...
std::optional<unsigned> find_negativity_witness(const ZMultiset& m, unsigned n_max);

struct GrowthBound {
  Real epsilon;
  Real c;
};
struct GrowthVerdict {
  bool holds;
  std::optional<unsigned> first_violation;
};
// Verifies bl_real_sum(n) >= -c exp(eps n) for all n <= n_max.
GrowthVerdict check_growth_bound(const ZMultiset& m, const GrowthBound& gb, unsigned n_max);

struct SymmetryFlags {
  bool conjugate;
  bool functional;
};
// Verifies multiplicity-aware closure under conjugation and rho -> 2 sigma - rho
// (tolerance-matched) and records the flags on the multiset.
SymmetryFlags check_symmetries(ZMultiset& m, const Real& tol);

enum class MultisetKind { on_line, with_violator, random_symmetric };

struct GenParams {
  Real offset{0.3};    // real-part offset of the violator quadruple
  Real t_min{1.0};
  double alpha = 1.5;  // heavy-tail exponent for ordinates
};

// Deterministic generation from the seed.  on_line: conjugate pairs on
// Re = sigma; with_violator: one conjugate quadruple off the line at the
// declared offset on top of an on-line base; random_symmetric: off-line
// quadruples closed under both symmetries.
ZMultiset gen_multiset(MultisetKind kind, std::uint64_t seed, unsigned count,
                       const Real& sigma, const Real& a, const GenParams& params = GenParams{});

// JSON: {"schema_version":1,"sigma":...,"a":...,"elements":[{re,im,mult}...]}
ZMultiset load_multiset(const std::string& path, mpfr_prec_t prec = 192);
void save_multiset(const ZMultiset& m, const std::string& path);

}  // namespace zetali
