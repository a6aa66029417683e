#pragma once

// Reference computations used to cross-check the library. They share only
// the CycNum container and ring operations with the code under test.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "itqft/cyclotomic.hpp"
#include "itqft/hadic.hpp"

namespace oracle {

using itqft::CycNum;

inline CycNum zeta(int p, long k) {
  // zeta^k from scratch: zeta^(p-1) = -(1 + ... + zeta^(p-2)).
  const long r = ((k % p) + p) % p;
  std::vector<mpz_class> c(static_cast<std::size_t>(p - 1), 0);
  if (r == p - 1) {
    for (auto& x : c) x = -1;
  } else {
    c[static_cast<std::size_t>(r)] = 1;
  }
  return CycNum::from_coeffs(p, c);
}

inline CycNum rational(int p, const mpq_class& a) {
  std::vector<mpq_class> c(static_cast<std::size_t>(p - 1), 0);
  c[0] = a;
  return CycNum::from_rationals(p, c);
}

/// zeta -> zeta^k applied coefficientwise.
inline CycNum sigma(const CycNum& x, long k) {
  CycNum r(x.p());
  for (std::size_t i = 0; i < x.size(); ++i) r += zeta(x.p(), static_cast<long>(i) * k) * rational(x.p(), x.coeff(i));
  return r;
}

/// Field norm as a rational; product of all Galois conjugates.
inline mpq_class norm(const CycNum& x) {
  CycNum prod = CycNum::from_int(x.p(), 1);
  for (long k = 1; k < x.p(); ++k) prod *= sigma(x, k);
  for (std::size_t i = 1; i < prod.size(); ++i)
    if (prod.coeff(i) != 0) throw std::logic_error("norm is not rational");
  return prod.coeff(0);
}

/// x^-1 = (prod_{k != 1} sigma_k(x)) / N(x).
inline CycNum inverse(const CycNum& x) {
  if (x.is_zero()) throw std::domain_error("zero");
  CycNum prod = CycNum::from_int(x.p(), 1);
  for (long k = 2; k < x.p(); ++k) prod *= sigma(x, k);
  return prod * rational(x.p(), 1 / norm(x));
}

/// v_h(x) = v_p(N(x)) for integral x; (h) is the unique prime over p and has norm p.
inline int valuation(const CycNum& x) {
  if (x.is_zero()) return itqft::kInfiniteValuation;
  mpz_class n = abs(norm(x).get_num());
  int v = 0;
  while (n % x.p() == 0) {
    n /= x.p();
    ++v;
  }
  return v;
}

/// h-adic digits from the valuation oracle: d_0 is the unique residue with
/// v(x - d_0) > 0.
inline std::vector<int> digits(CycNum x, int N) {
  const int p = x.p();
  const CycNum h_inv = inverse(CycNum::from_int(p, 1) - zeta(p, 1));
  std::vector<int> out;
  for (int i = 0; i <= N; ++i) {
    int d = -1;
    for (int a = 0; a < p; ++a)
      if (valuation(x - CycNum::from_int(p, a)) > 0) {
        d = a;
        break;
      }
    if (d < 0) throw std::logic_error("no digit");
    out.push_back(d);
    x = (x - CycNum::from_int(p, d)) * h_inv;
  }
  return out;
}

inline CycNum random_integral(int p, std::mt19937_64& rng, int bound = 9) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  std::vector<mpz_class> c(static_cast<std::size_t>(p - 1));
  for (auto& x : c) x = dist(rng);
  return CycNum::from_coeffs(p, c);
}

/// Horner evaluation of a polynomial with CycNum coefficients.
inline CycNum eval(const std::vector<CycNum>& poly, const CycNum& z) {
  CycNum r(z.p());
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) r = r * z + *it;
  return r;
}

/// Newton coefficients of poly at the nodes: f[x_0], f[x_0,x_1], ...
inline std::vector<CycNum> divided_differences(const std::vector<CycNum>& poly, const std::vector<CycNum>& nodes) {
  std::vector<CycNum> table;
  for (const auto& x : nodes) table.push_back(eval(poly, x));
  std::vector<CycNum> out{table.front()};
  for (std::size_t k = 1; k < nodes.size(); ++k) {
    for (std::size_t i = 0; i + k < nodes.size(); ++i)
      table[i] = (table[i + 1] - table[i]) * inverse(nodes[i + k] - nodes[i]);
    out.push_back(table.front());
  }
  return out;
}

}  // namespace oracle
