#pragma once

// Truncated h-adic expansions: elements of Z[zeta_p]/(h^(N+1)) written
// uniquely as sum_{i=0}^{N} d_i h^i with digits d_i in {0, ..., p-1}.

#include <stdexcept>
#include <vector>

#include "itqft/cyclotomic.hpp"

namespace itqft {

struct HDigits {
  int p = 0;
  int N = 0;
  std::vector<int> digits;  // least significant first, size N+1

  friend bool operator==(const HDigits&, const HDigits&) = default;

  bool is_zero() const {
    for (int dgt : digits)
      if (dgt != 0) return false;
    return true;
  }
};

/// Digits of x modulo h^(N+1): d_0 = x mod h, then recurse on (x - d_0)/h.
inline HDigits truncate(const CycNum& x, int N) {
  if (N < 0) throw std::invalid_argument("truncation depth must be >= 0");
  if (!x.is_integral()) throw std::domain_error("truncate of a non-integral element");
  const int p = x.p();
  const CycNum h_inv = h_inverse(p);
  HDigits out{p, N, std::vector<int>(static_cast<std::size_t>(N + 1), 0)};
  CycNum cur = x;
  for (int i = 0; i <= N; ++i) {
    if (cur.is_zero()) break;
    const int dgt = reduce_mod_h(cur);
    out.digits[static_cast<std::size_t>(i)] = dgt;
    if (i == N) break;
    auto next = exact_div_h(cur - CycNum::from_int(p, dgt), h_inv);
    if (!next) throw IntegralityError("x - (x mod h) is not divisible by h");
    cur = *std::move(next);
  }
  return out;
}

/// The canonical lift sum d_i h^i in Z[zeta_p].
inline CycNum lift(const HDigits& x) {
  const CycNum h = h_element(x.p);
  CycNum acc(x.p);
  for (auto it = x.digits.rbegin(); it != x.digits.rend(); ++it) {
    acc *= h;
    acc += CycNum::from_int(x.p, *it);
  }
  return acc;
}

namespace detail {
inline void check_compatible(const HDigits& a, const HDigits& b) {
  if (a.p != b.p || a.N != b.N) throw std::invalid_argument("HDigits operands differ in p or N");
}
}  // namespace detail

// Ring operations of Z[zeta_p]/(h^(N+1)), carried out on canonical lifts.
inline HDigits operator+(const HDigits& a, const HDigits& b) {
  detail::check_compatible(a, b);
  return truncate(lift(a) + lift(b), a.N);
}

inline HDigits operator*(const HDigits& a, const HDigits& b) {
  detail::check_compatible(a, b);
  return truncate(lift(a) * lift(b), a.N);
}

}  // namespace itqft
