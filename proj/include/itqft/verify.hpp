#pragma once

// Verification suites over a (p, c) grid, shared by the CLI.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "itqft/cyclotomic.hpp"
#include "itqft/fp_rep.hpp"
#include "itqft/hadic.hpp"
#include "itqft/identities.hpp"
#include "itqft/qint.hpp"
#include "itqft/rep.hpp"
#include "itqft/skein_poly.hpp"

namespace itqft {

struct VerifyEntry {
  int p = 0;
  int c = -1;  // -1 when the check is not tied to one c
  std::string suite;
  std::string check;
  bool pass = false;
  std::string detail;
};

using VerifyLog = std::vector<VerifyEntry>;

inline bool all_pass(const VerifyLog& log) {
  for (const auto& e : log)
    if (!e.pass) return false;
  return true;
}

/// Random integral element with coefficients in [-bound, bound].
inline CycNum random_integral(int p, std::mt19937_64& rng, int bound = 20) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  std::vector<mpz_class> nums(static_cast<std::size_t>(p - 1));
  for (auto& x : nums) x = dist(rng);
  return CycNum::from_coeffs(p, std::move(nums));
}

/// truncate(x + y) and truncate(x * y) agree with the digit-level ring
/// operations on `pairs` random pairs with N <= max_n.
inline bool hadic_homomorphism(int p, int pairs, int max_n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> depth(0, max_n);
  for (int k = 0; k < pairs; ++k) {
    const CycNum x = random_integral(p, rng);
    const CycNum y = random_integral(p, rng);
    const int N = depth(rng);
    const HDigits tx = truncate(x, N), ty = truncate(y, N);
    if (!(truncate(x + y, N) == tx + ty) || !(truncate(x * y, N) == tx * ty)) return false;
    if (tx.digits[0] != reduce_mod_h(x)) return false;
  }
  return true;
}

/// Digits of p vanish below position p-1 and the digit at p-1 is nonzero.
inline bool hadic_p_digits(int p) {
  const HDigits t = truncate(CycNum::from_int(p, p), p - 1);
  for (int i = 0; i < p - 1; ++i)
    if (t.digits[static_cast<std::size_t>(i)] != 0) return false;
  return t.digits[static_cast<std::size_t>(p - 1)] != 0;
}

inline void run_rep_suite(const QScalars& s, VerifyLog& log) {
  const int p = s.p();
  for (int c = 0; c < s.d(); ++c) {
    for (auto& ch : verify_relations(s, c).checks)
      log.push_back({p, c, "rep", ch.name, ch.pass, ch.detail});

    const int rank = s.d() - c;
    bool norm_val = true, norm_forms = true, ratio_unit = true, ladder = true;
    for (int n = 0; n < rank; ++n) {
      const CycNum nq = norm_qprime(s, n, c);
      norm_val = norm_val && h_valuation(nq) == c;
      const CycNum f = s.brace_fact(n);
      norm_forms = norm_forms && norm_q(s, n, c) == f * f * nq;
      for (int m = 0; m < rank; ++m) ratio_unit = ratio_unit && h_valuation(ratio_r(s, n, m, c)) == 0;
      for (int m = 0; m <= n; ++m)
        for (int l = 0; l <= m + c; ++l) ladder = ladder && h_valuation(b_term(s, n, m, l, c)) == l;
    }
    log.push_back({p, c, "rep", "norm_valuation", norm_val, "v_h((Q'_n,Q'_n)) = c"});
    log.push_back({p, c, "rep", "norm_forms", norm_forms, "(Q_n,Q_n) = ({n}!)^2 (Q'_n,Q'_n)"});
    log.push_back({p, c, "rep", "ratio_unit", ratio_unit, "R_{n,m} is a unit"});
    log.push_back({p, c, "rep", "valuation_ladder", ladder, "v_h(b_{n,m,l}) = l"});
  }
  log.push_back({p, -1, "rep", "hadic_homomorphism", hadic_homomorphism(p, 200, 8, 0x5eed0000u + static_cast<unsigned>(p)),
                 "truncate respects + and *"});
  log.push_back({p, -1, "rep", "hadic_p_digits", hadic_p_digits(p), "(h^(p-1)) = (p)"});
}

inline void run_skein_suite(const QScalars& s, VerifyLog& log) {
  const int p = s.p();
  bool prop = true;
  for (int c = 0; c < p; ++c)
    for (int m = 0; m + c < p; ++m)
      for (int n = 0; m + n + c < p; ++n) prop = prop && verify_product_expansion(s, m, n, c);
  log.push_back({p, -1, "skein", "product_expansion", prop, "Q_m Q_{n,c} = sum_l C^l_{m,n+c} Q_{m+n-l,c}"});

  bool agree = true, val = true, sym = true;
  for (int m = 0; m < p; ++m) {
    for (int n = 0; n <= m; ++n) {
      const auto row = c_recursive_row(s, m, n);
      for (int l = 0; l <= n; ++l) {
        const CycNum cl = c_closed(s, l, m, n);
        agree = agree && cl == row[static_cast<std::size_t>(l)];
        sym = sym && cl == c_closed(s, l, n, m);
        const bool vanishes = m + n + 1 >= p && cl.is_zero();
        val = val && (vanishes || h_valuation(cl) == 2 * l);
      }
    }
  }
  log.push_back({p, -1, "skein", "c_closed_eq_recursive", agree, ""});
  log.push_back({p, -1, "skein", "c_symmetry", sym, ""});
  log.push_back({p, -1, "skein", "c_valuation", val, "v_h(C^l_{m,n}) = 2l, or C^l_{m,n} = 0 with m+n+1 >= p"});

  bool beta_ok = true;
  for (int m = 0; m < p; ++m)
    for (int n = 0; n < p; ++n) beta_ok = beta_ok && s.lambda(m) - s.lambda(n) == beta(s, m, n);
  log.push_back({p, -1, "skein", "beta_identity", beta_ok, "lambda_m - lambda_n = {n-m}{m+n+2}"});

  bool omega_units = true;
  for (const auto& g : omega_plus_coeffs(s)) omega_units = omega_units && is_associate(g, s.one());
  log.push_back({p, -1, "skein", "omega_units", omega_units, "gamma_m ~ 1"});
}

inline void run_fp_suite(const QScalars& s, VerifyLog& log) {
  const int p = s.p();
  for (int c = 0; c < s.d(); ++c) {
    bool agree = true;
    Rho0 rho{FpMatrix(p, 1), FpMatrix(p, 1)};
    try {
      rho = rho0_matrices(s, c);
    } catch (const ConsistencyError&) {
      agree = false;
    }
    log.push_back({p, c, "fp", "mod_h_closed_forms", agree, "reduced exact matrices = closed forms"});
    if (!agree) continue;
    log.push_back({p, c, "fp", "intertwine", verify_intertwine(rho, c), "Phi r(T) = t_hat Phi, Phi r(T*) = t*_hat Phi"});
    log.push_back({p, c, "fp", "irreducible", irreducibility_check(rho), "generated algebra is full"});
    const auto id = FpMatrix::identity(p, rho.t_hat.size());
    log.push_back({p, c, "fp", "order_p", rho.t_hat.pow(static_cast<unsigned long>(p)) == id &&
                                                rho.tstar_hat.pow(static_cast<unsigned long>(p)) == id, ""});
  }
  log.push_back({p, -1, "fp", "u_lemma", u_lemma_check(p), "(-2)^-k (d-k-1)! (2k+1)!! = (d-1)!"});
}

inline void run_identity_suite(long n_max, VerifyLog& log) {
  const auto rep = verify_identity_grid(n_max);
  std::string detail = std::to_string(rep.cases) + " cases";
  for (const auto& f : rep.failures)
    detail += "; fails at (n,m,i)=(" + std::to_string(f.n) + "," + std::to_string(f.m) + "," + std::to_string(f.i) + ")";
  log.push_back({0, -1, "identity", "binomial_sum", rep.all_pass(), detail});
}

}  // namespace itqft
