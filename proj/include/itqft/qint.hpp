#pragma once

// Quantum integers at q = zeta_p with A = -q^(d+1), a primitive 2p-th root
// of unity squaring to q.
//
// Sign convention: {n} = (-A)^n - (-A)^(-n) and {n}^+ = (-A)^n + (-A)^(-n).
// This differs from the more common [n] = (A^(2n) - A^(-2n))/(A^2 - A^(-2))
// convention; note -A = q^(d+1), so every quantity below is a signed power sum
// of zeta_p and never leaves Z[zeta_p].

#include <stdexcept>
#include <vector>

#include "itqft/cyclotomic.hpp"
#include "itqft/prime.hpp"

namespace itqft {

class QScalars {
 public:
  explicit QScalars(PrimeContext ctx) : ctx_(ctx), h_inv_(h_inverse(ctx.p())) { precompute(); }
  explicit QScalars(int p) : QScalars(PrimeContext(p)) {}

  const PrimeContext& ctx() const noexcept { return ctx_; }
  int p() const noexcept { return ctx_.p(); }
  int d() const noexcept { return ctx_.d(); }

  CycNum zero() const { return CycNum(p()); }
  CycNum one() const { return CycNum::from_int(p(), 1); }
  CycNum integer(long n) const { return CycNum::from_int(p(), n); }

  CycNum q_pow(long k) const { return zeta_pow(p(), k); }
  /// (-A)^k = q^(k(d+1)).
  CycNum minus_a_pow(long k) const { return zeta_pow(p(), mod_p(k) * (d() + 1)); }
  /// A^k = (-1)^k q^(k(d+1)).
  CycNum a_pow(long k) const {
    CycNum r = minus_a_pow(k);
    return (k % 2 == 0) ? r : -r;
  }
  CycNum A() const { return a_pow(1); }
  CycNum h() const { return h_element(p()); }

  CycNum brace(long n) const { return minus_a_pow(n) - minus_a_pow(-n); }
  CycNum brace_plus(long n) const { return minus_a_pow(n) + minus_a_pow(-n); }
  CycNum brace_q(long n) const { return q_pow(n) - q_pow(-n); }

  // Factorials; every variant is 0 for negative n and 1 for n = 0. Double
  // factorials step down by two, ending in {1} or {2}.
  CycNum brace_fact(long n) const { return lookup(fact_, n, &QScalars::brace, 1); }
  CycNum brace_dfact(long n) const { return lookup(dfact_, n, &QScalars::brace, 2); }
  CycNum brace_plus_fact(long n) const { return lookup(plus_fact_, n, &QScalars::brace_plus, 1); }
  CycNum brace_plus_dfact(long n) const { return lookup(plus_dfact_, n, &QScalars::brace_plus, 2); }
  CycNum brace_q_fact(long n) const { return lookup(q_fact_, n, &QScalars::brace_q, 1); }

  // Field inverses of the factorials, for 0 <= n < p where they are nonzero.
  const CycNum& brace_fact_inv(long n) const { return fact_inv_.at(index(n)); }
  const CycNum& brace_dfact_inv(long n) const { return dfact_inv_.at(index(n)); }
  const CycNum& brace_plus_fact_inv(long n) const { return plus_fact_inv_.at(index(n)); }
  const CycNum& brace_q_fact_inv(long n) const { return q_fact_inv_.at(index(n)); }

  /// The exact quotient {n}/{1} in Z[zeta_p].
  CycNum brace_over_one(long n) const {
    return exact_div_or_throw(brace(n), brace(1), "{n}/{1}");
  }

  /// lambda_i = -q^(i+1) - q^(-i-1).
  CycNum lambda(long i) const { return -(q_pow(i + 1) + q_pow(-i - 1)); }

  /// Twist eigenvalue mu_k = (-1)^k A^(k(k+2)).
  CycNum mu(long k) const {
    CycNum r = a_pow(k * (k + 2) % (2L * p()));
    return (k % 2 == 0) ? r : -r;
  }

  /// gamma_m = (-A)^((m^2+5m)/2) / prod_{k=1}^{m} (A^(2k+1) - 1), a unit.
  const CycNum& gamma(long m) const {
    if (m < 0 || m >= d()) throw std::out_of_range("gamma_m needs 0 <= m <= d-1");
    return gamma_[static_cast<std::size_t>(m)];
  }

 private:
  long mod_p(long k) const { return ((k % p()) + p()) % p(); }

  std::size_t index(long n) const {
    if (n < 0) throw std::out_of_range("negative factorial index has no inverse");
    return static_cast<std::size_t>(n);
  }

  using Factor = CycNum (QScalars::*)(long) const;

  CycNum compute_fact(long n, Factor f, long step) const {
    if (n < 0) return zero();
    CycNum r = one();
    for (long k = n; k > 0; k -= step) r *= (this->*f)(k);
    return r;
  }

  CycNum lookup(const std::vector<CycNum>& table, long n, Factor f, long step) const {
    if (n < 0) return zero();
    if (static_cast<std::size_t>(n) < table.size()) return table[static_cast<std::size_t>(n)];
    return compute_fact(n, f, step);
  }

  static std::vector<CycNum> build(const QScalars& s, Factor f, long step, long count) {
    std::vector<CycNum> t;
    t.reserve(static_cast<std::size_t>(count));
    for (long n = 0; n < count; ++n) {
      if (n < step) {
        t.push_back(n == 0 ? s.one() : (s.*f)(n));
      } else {
        t.push_back(t[static_cast<std::size_t>(n - step)] * (s.*f)(n));
      }
    }
    return t;
  }

  // (1 - zeta^j)^-1 = sigma_j(h^-1) for j prime to p.
  CycNum one_minus_zeta_inv(long j) const { return h_inv_.galois(mod_p(j)); }

  // (1 + zeta^j)^-1 = (1 - zeta^j) / (1 - zeta^(2j)).
  CycNum one_plus_zeta_inv(long j) const { return (one() - q_pow(j)) * one_minus_zeta_inv(2 * j); }

  // With e = k(d+1): {k} = -q^-e (1 - q^(2e)), {k}^+ = q^-e (1 + q^(2e)),
  // {k}_q = -q^-k (1 - q^(2k)).
  CycNum brace_inv(long k) const {
    const long e = mod_p(k) * (d() + 1);
    return -(q_pow(e) * one_minus_zeta_inv(2 * e));
  }
  CycNum brace_plus_inv(long k) const {
    const long e = mod_p(k) * (d() + 1);
    return q_pow(e) * one_plus_zeta_inv(2 * e);
  }
  CycNum brace_q_inv(long k) const { return -(q_pow(k) * one_minus_zeta_inv(2 * k)); }

  // Inverses of the products in build(); requires every factor to be a unit
  // times a power of h, true for indices below p.
  static std::vector<CycNum> build_inv(const QScalars& s, Factor f_inv, long step, long count) {
    std::vector<CycNum> t;
    t.reserve(static_cast<std::size_t>(count));
    for (long n = 0; n < count; ++n) {
      if (n < step) {
        t.push_back(n == 0 ? s.one() : (s.*f_inv)(n));
      } else {
        t.push_back(t[static_cast<std::size_t>(n - step)] * (s.*f_inv)(n));
      }
    }
    return t;
  }

  void precompute() {
    const long n = p();
    fact_ = build(*this, &QScalars::brace, 1, n);
    dfact_ = build(*this, &QScalars::brace, 2, n);
    plus_fact_ = build(*this, &QScalars::brace_plus, 1, n);
    plus_dfact_ = build(*this, &QScalars::brace_plus, 2, n);
    q_fact_ = build(*this, &QScalars::brace_q, 1, n);
    fact_inv_ = build_inv(*this, &QScalars::brace_inv, 1, n);
    dfact_inv_ = build_inv(*this, &QScalars::brace_inv, 2, n);
    plus_fact_inv_ = build_inv(*this, &QScalars::brace_plus_inv, 1, n);
    q_fact_inv_ = build_inv(*this, &QScalars::brace_q_inv, 1, n);

    gamma_.reserve(static_cast<std::size_t>(d()));
    // A^(2k+1) - 1 = -(1 + q^((d+1)(2k+1))), and (d+1)(2k+1) is prime to p for k < d.
    CycNum denom_inv = one();
    for (long m = 0; m < d(); ++m) {
      if (m > 0) denom_inv *= -one_plus_zeta_inv((d() + 1) * (2 * m + 1));
      // (m^2 + 5m) = m(m+5) is even since m and m+5 have opposite parity.
      const long twice = m * m + 5 * m;
      if (twice % 2 != 0) throw IntegralityError("gamma exponent is not an integer");
      CycNum g = minus_a_pow(twice / 2) * denom_inv;
      if (!g.is_integral()) throw IntegralityError("gamma_m is not integral");
      gamma_.push_back(std::move(g));
    }
  }

  PrimeContext ctx_;
  CycNum h_inv_;
  std::vector<CycNum> fact_, dfact_, plus_fact_, plus_dfact_, q_fact_;
  std::vector<CycNum> fact_inv_, dfact_inv_, plus_fact_inv_, q_fact_inv_;
  std::vector<CycNum> gamma_;
};

}  // namespace itqft
