#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zetali/complexnum.hpp"
#include "zetali/precision.hpp"

namespace zetali {

// Validated, ordered table of nontrivial-zero ordinates.  Ordinates are
// kept both as the exact input strings and as parsed high-precision
// values, so downstream precision is not capped by the table format.
// Immutable after construction; safe to share across threads.
class ZeroCatalog {
 public:
  struct Entry {
    std::string text;      // ordinate exactly as read
    Real ordinate;         // parsed at kParsePrec
    unsigned multiplicity = 1;
  };

  static constexpr mpfr_prec_t kParsePrec = 320;

  // Plain-text table: one decimal ordinate per line, '#' comments allowed.
  // An optional sidecar "<path>.mult" holds "index multiplicity" pairs
  // (1-based index over ordinate lines).
  static ZeroCatalog ingest(const std::string& path);

  // Writes the table back in the same format (plus a sidecar when any
  // multiplicity differs from 1).
  void serialize(const std::string& path) const;

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t line_count() const { return entries_.size(); }
  // Total zero count in the upper half-plane, multiplicities included.
  std::size_t zero_count() const;
  const Real& t_max() const { return t_max_; }
  const std::string& source_label() const { return source_label_; }

  // (1/2 + iT, 1/2 - iT) in ascending T order; an entry of multiplicity m
  // is yielded m times consecutively.
  std::vector<std::pair<Complex, Complex>> paired_zeros() const;

 private:
  std::vector<Entry> entries_;
  Real t_max_;
  std::string source_label_;
};

struct DensityEstimate {
  Real T;
  Real count_estimate;
};

// Riemann-von Mangoldt main term (T/2pi) ln(T/2pi) - T/2pi + 7/8.
// Used only inside tail bounds, never as an exact count.  Requires T > 2pi.
DensityEstimate count_below(const Real& T, mpfr_prec_t prec = 128);

struct SpotCheck {
  std::size_t index;  // 0-based entry index
  Real ordinate;
  Real xi_abs;        // |xi(1/2 + iT)|
  bool pass;
};

// Evaluates |xi(1/2 + iT)| at `samples` ordinates spread over the catalog
// and compares against the threshold.
std::vector<SpotCheck> spot_check(const ZeroCatalog& cat, std::size_t samples,
                                  const PrecisionContext& ctx,
                                  const Real& threshold);

}  // namespace zetali
