#include "zetali/bernoulli.hpp"

#include <gmp.h>

#include <deque>
#include <mutex>

namespace zetali {
namespace {

struct Q {
  mpq_t v;
  Q() { mpq_init(v); }
  ~Q() { mpq_clear(v); }
  Q(const Q&) = delete;
  Q& operator=(const Q&) = delete;
};

struct BernoulliCache {
  std::mutex mu;
  std::deque<Q> q;  // q[m] = B_m, exact

  BernoulliCache() {
    q.emplace_back();
    mpq_set_ui(q[0].v, 1, 1);
    q.emplace_back();
    mpq_set_si(q[1].v, -1, 2);
  }

  // Extend via B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j.
  void ensure(unsigned n) {
    mpq_t term, sum;
    mpq_init(term);
    mpq_init(sum);
    mpz_t binom;
    mpz_init(binom);
    while (q.size() <= n) {
      unsigned m = static_cast<unsigned>(q.size());
      mpq_set_ui(sum, 0, 1);
      for (unsigned j = 0; j < m; ++j) {
        if (j >= 3 && (j & 1)) continue;  // odd Bernoulli numbers vanish
        mpz_bin_uiui(binom, m + 1, j);
        mpq_set_z(term, binom);
        mpq_mul(term, term, q[j].v);
        mpq_add(sum, sum, term);
      }
      q.emplace_back();
      mpq_set_ui(q.back().v, m + 1, 1);
      mpq_div(q.back().v, sum, q.back().v);
      mpq_neg(q.back().v, q.back().v);
      mpq_canonicalize(q.back().v);
    }
    mpz_clear(binom);
    mpq_clear(term);
    mpq_clear(sum);
  }
};

BernoulliCache& cache() {
  static BernoulliCache c;
  return c;
}

}  // namespace

Real bernoulli(unsigned n, mpfr_prec_t prec) {
  auto& c = cache();
  std::lock_guard<std::mutex> lock(c.mu);
  c.ensure(n);
  Real r(prec);
  mpfr_set_q(r.raw(), c.q[n].v, MPFR_RNDN);
  return r;
}

}  // namespace zetali
