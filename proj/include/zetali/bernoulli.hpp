#pragma once

#include "zetali/real.hpp"

namespace zetali {

// Bernoulli number B_n (B_1 = -1/2) rounded from the exact rational to
// the requested precision.  Values are computed once and cached;
// thread-safe.
Real bernoulli(unsigned n, mpfr_prec_t prec);

}  // namespace zetali
