#pragma once

// Big-integer check of the binomial sum identity
//
//   sum_{k=m}^{n} (-1)^(k+n) (k/n) C(k^2-1, n-m-i) C(2n, n-k) C(k+m-1, k-m)
//     = (2n-1)! / ((n-m)! (2m-1)!)   if i = 0,
//     = 0                            if i > 0,
//
// for n >= m >= 1 and i >= 0.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace itqft {

struct IdentityCase {
  long n = 1;
  long m = 1;
  long i = 0;
};

/// C(a, b), zero for b < 0 or b > a.
inline mpz_class binomial(long a, long b) {
  mpz_class r = 0;
  if (a < 0 || b < 0 || b > a) return r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

inline mpz_class big_factorial(long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

/// The left-hand side, summed over Q and asserted to be an integer.
inline mpz_class krattenthaler_sum(const IdentityCase& ic) {
  if (ic.m < 1 || ic.n < ic.m || ic.i < 0) throw std::invalid_argument("need n >= m >= 1 and i >= 0");
  mpq_class total = 0;
  for (long k = ic.m; k <= ic.n; ++k) {
    mpz_class term = binomial(k * k - 1, ic.n - ic.m - ic.i) * binomial(2 * ic.n, ic.n - k) *
                     binomial(k + ic.m - 1, k - ic.m) * k;
    if ((k + ic.n) % 2 != 0) term = -term;
    total += mpq_class(term, ic.n);
  }
  total.canonicalize();
  if (total.get_den() != 1) throw std::logic_error("binomial sum is not an integer");
  return total.get_num();
}

inline mpz_class krattenthaler_rhs(const IdentityCase& ic) {
  if (ic.i > 0) return 0;
  return big_factorial(2 * ic.n - 1) / (big_factorial(ic.n - ic.m) * big_factorial(2 * ic.m - 1));
}

struct IdentityReport {
  long cases = 0;
  std::vector<IdentityCase> failures;

  bool all_pass() const { return failures.empty(); }
};

/// Checks every 1 <= m <= n <= n_max, 0 <= i <= n - m.
inline IdentityReport verify_identity_grid(long n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  IdentityReport rep;
  for (long n = 1; n <= n_max; ++n)
    for (long m = 1; m <= n; ++m)
      for (long i = 0; i <= n - m; ++i) {
        const IdentityCase ic{n, m, i};
        ++rep.cases;
        if (krattenthaler_sum(ic) != krattenthaler_rhs(ic)) rep.failures.push_back(ic);
      }
  return rep;
}

}  // namespace itqft
