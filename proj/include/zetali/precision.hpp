#pragma once

#include "zetali/errors.hpp"
#include "zetali/real.hpp"

namespace zetali {

// Working precision plus the absolute-error goal every numeric operation
// must meet.  Guard margin: the target may not be tighter than 2^-(bits-8).
struct PrecisionContext {
  mpfr_prec_t precision_bits;
  Real target_abs_error;

  PrecisionContext(mpfr_prec_t bits_, Real target)
      : precision_bits(bits_), target_abs_error(std::move(target)) {
    if (precision_bits < 64) throw DomainError("precision_bits must be >= 64");
    if (!(target_abs_error > Real(0.0)))
      throw DomainError("target_abs_error must be positive");
    if (target_abs_error < Real::two_pow(-(precision_bits - 8)))
      throw DomainError("target_abs_error below 2^-(precision_bits-8) guard");
  }

  static PrecisionContext bits(mpfr_prec_t b) {
    return PrecisionContext(b, Real::two_pow(-(b - 16)));
  }

  // Internal computations run with guard bits on top of precision_bits.
  mpfr_prec_t work_prec() const { return precision_bits + 64; }
};

}  // namespace zetali
