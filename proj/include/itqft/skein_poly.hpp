#pragma once

// Polynomial model of the solid-torus skein module and its colored
// quotients.
//
// The colored module is cyclic over the polynomial algebra in the core z,
// generated by the lollipop with loop color c, and its basis elements are
// Q_{n,c}(z) = prod_{i=c}^{c+n-1} (z - lambda_i), 0 <= n < d - c. Since
// Q_{n,c} vanishes in the module for n >= d - c, the module is
// K[z]/(Q_{d-c,c}), which is what multiply_mod implements.

#include <algorithm>
#include <span>
#include <stdexcept>
#include <vector>

#include "itqft/cyclotomic.hpp"
#include "itqft/qint.hpp"

namespace itqft {

/// Polynomial in z over Q(zeta_p), coefficient i multiplying z^i.
using Poly = std::vector<CycNum>;

inline void trim_poly(Poly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  const int p = a.front().p();
  Poly r(a.size() + b.size() - 1, CycNum(p));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

inline Poly poly_add(const Poly& a, const Poly& b) {
  const Poly& big = a.size() >= b.size() ? a : b;
  const Poly& small = a.size() >= b.size() ? b : a;
  Poly r = big;
  for (std::size_t i = 0; i < small.size(); ++i) r[i] += small[i];
  return r;
}

inline Poly poly_scale(Poly a, const CycNum& s) {
  for (auto& c : a) c *= s;
  return a;
}

/// True iff a and b agree after dropping trailing zero coefficients.
inline bool poly_equal(Poly a, Poly b) {
  trim_poly(a);
  trim_poly(b);
  return a == b;
}

/// Monomial coefficients of Q_{n,c}(z) = prod_{i=c}^{c+n-1} (z - lambda_i).
inline Poly q_poly_monomial(const QScalars& s, int n, int c) {
  Poly r{s.one()};
  for (int i = c; i < c + n; ++i) r = poly_mul(r, Poly{-s.lambda(i), s.one()});
  return r;
}

/// Coordinates of `poly` in the basis {Q_{n,c}}_{n >= 0}, by repeated
/// synthetic division by (z - lambda_c), (z - lambda_{c+1}), ...
inline std::vector<CycNum> expand_in_qc(const QScalars& s, Poly poly, int c) {
  trim_poly(poly);
  std::vector<CycNum> out;
  out.reserve(poly.size());
  for (int k = 0; !poly.empty(); ++k) {
    const CycNum root = s.lambda(c + k);
    // Horner: poly = (z - root) * quot + rem.
    Poly quot(poly.size() - 1, s.zero());
    CycNum acc = poly.back();
    for (std::size_t i = poly.size() - 1; i-- > 0;) {
      quot[i] = acc;
      acc = poly[i] + acc * root;
    }
    out.push_back(std::move(acc));
    poly = std::move(quot);
  }
  return out;
}

/// Inverse of expand_in_qc: sum_n coeffs[n] * Q_{n,c}(z) in monomials.
inline Poly assemble_from_qc(const QScalars& s, std::span<const CycNum> coeffs, int c) {
  Poly acc;
  // Nested form: e_0 + (z - l_c)(e_1 + (z - l_{c+1})(e_2 + ...)).
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    acc = poly_mul(acc, Poly{-s.lambda(c + static_cast<int>(k)), s.one()});
    if (acc.empty()) acc.push_back(s.zero());
    acc[0] += coeffs[k];
  }
  return acc;
}

/// Structure constant C^l_{m,n} of Q_m Q_n = sum_l C^l_{m,n} Q_{m+n-l} from
/// its closed form
///   (-1)^l {m}!{n}!{m+n+1}! / ({m-l}!{n-l}!{m+n+1-l}!{l}!),
/// evaluated as (-1)^l [m choose l] {n}_l {m+n+1}_l with falling products
/// {a}_l = {a}{a-1}...{a-l+1}, so a vanishing factor is never divided by.
inline CycNum c_closed(const QScalars& s, int l, int m, int n) {
  if (l < 0 || l > std::min(m, n) || m >= s.p() || n >= s.p())
    throw std::out_of_range("c_closed needs 0 <= l <= min(m,n) and m,n < p");
  if (l == 0) return s.one();
  CycNum binom = s.brace_fact(m) * s.brace_fact_inv(l) * s.brace_fact_inv(m - l);
  if (!binom.is_integral()) throw IntegralityError("quantum binomial is not integral");
  CycNum r = binom;
  for (int k = 0; k < l; ++k) r *= s.brace(n - k) * s.brace(m + n + 1 - k);
  return (l % 2 == 0) ? r : -r;
}

/// beta_{m,n} = {n-m}{m+n+2}; equal to lambda_m - lambda_n.
inline CycNum beta(const QScalars& s, int m, int n) { return s.brace(n - m) * s.brace(m + n + 2); }

/// Row n of the structure constants, (C^0_{m,n}, ..., C^n_{m,n}) for n <= m,
/// from the recursion in n:
///   C^0_{m,n+1}     = C^0_{m,n}
///   C^l_{m,n+1}     = C^l_{m,n} + beta_{m+n-l+1,n} C^{l-1}_{m,n}   (1 <= l <= n)
///   C^{n+1}_{m,n+1} = beta_{m,n} C^n_{m,n}
/// Pure ring arithmetic.
inline std::vector<CycNum> c_recursive_row(const QScalars& s, int m, int n) {
  if (n > m) throw std::out_of_range("c_recursive_row needs n <= m");
  std::vector<CycNum> row{s.one()};
  for (int k = 0; k < n; ++k) {
    std::vector<CycNum> next;
    next.reserve(static_cast<std::size_t>(k + 2));
    next.push_back(row[0]);
    for (int l = 1; l <= k; ++l)
      next.push_back(row[static_cast<std::size_t>(l)] +
                     beta(s, m + k - l + 1, k) * row[static_cast<std::size_t>(l - 1)]);
    next.push_back(beta(s, m, k) * row[static_cast<std::size_t>(k)]);
    row = std::move(next);
  }
  return row;
}

/// C^l_{m,n} from the recursion; the case n > m uses C^l_{m,n} = C^l_{n,m}.
inline CycNum c_recursive(const QScalars& s, int l, int m, int n) {
  if (l < 0 || l > std::min(m, n)) throw std::out_of_range("c_recursive needs 0 <= l <= min(m,n)");
  if (n > m) std::swap(m, n);
  return c_recursive_row(s, m, n)[static_cast<std::size_t>(l)];
}

/// Checks Q_m Q_{n,c} = sum_{l=0}^{min(m,n+c)} C^l_{m,n+c} Q_{m+n-l,c} as an
/// identity of polynomials (no quotient taken).
inline bool verify_product_expansion(const QScalars& s, int m, int n, int c) {
  if (m < 0 || n < 0 || c < 0 || m + n + c >= s.p())
    throw std::out_of_range("verify_product_expansion needs m + n + c < p");
  const Poly lhs = poly_mul(q_poly_monomial(s, m, 0), q_poly_monomial(s, n, c));
  std::vector<CycNum> rhs(static_cast<std::size_t>(m + n + 1), s.zero());
  for (int l = 0; l <= std::min(m, n + c); ++l)
    rhs[static_cast<std::size_t>(m + n - l)] += c_closed(s, l, m, n + c);
  return poly_equal(expand_in_qc(s, lhs, c), rhs) &&
         poly_equal(lhs, assemble_from_qc(s, rhs, c));
}

/// An element of the colored module in the Q_{.,c} basis; exactly d - c
/// coordinates.
struct QPoly {
  int c = 0;
  std::vector<CycNum> coeffs;

  friend bool operator==(const QPoly&, const QPoly&) = default;
};

inline QPoly qpoly_basis(const QScalars& s, int c, int n) {
  const int rank = s.d() - c;
  if (c < 0 || rank <= 0 || n < 0 || n >= rank) throw std::out_of_range("qpoly_basis index");
  QPoly x{c, std::vector<CycNum>(static_cast<std::size_t>(rank), s.zero())};
  x.coeffs[static_cast<std::size_t>(n)] = s.one();
  return x;
}

/// x * y in K[z]/(Q_{d-c,c}): coordinates of Q_{n,c}, n >= d - c, are
/// discarded.
inline QPoly multiply_mod(const QScalars& s, const QPoly& x, const Poly& y) {
  const auto rank = static_cast<std::size_t>(s.d() - x.c);
  if (x.coeffs.size() != rank) throw std::invalid_argument("QPoly has wrong rank");
  auto e = expand_in_qc(s, poly_mul(assemble_from_qc(s, x.coeffs, x.c), y), x.c);
  e.resize(rank, s.zero());
  return QPoly{x.c, std::move(e)};
}

/// Coordinates (gamma_0, ..., gamma_{d-1}) of omega_+ in the rescaled basis
/// Q'_m = Q_m / {m}!.
inline std::vector<CycNum> omega_plus_coeffs(const QScalars& s) {
  std::vector<CycNum> r;
  for (int m = 0; m < s.d(); ++m) r.push_back(s.gamma(m));
  return r;
}

/// Coordinates gamma_m / {m}! of omega_+ in the unprimed basis Q_m; these
/// lie in Q(zeta_p) but not in Z[zeta_p] for m > 0.
inline std::vector<CycNum> omega_plus_unprimed(const QScalars& s) {
  std::vector<CycNum> r;
  for (int m = 0; m < s.d(); ++m) r.push_back(s.gamma(m) * s.brace_fact_inv(m));
  return r;
}

inline Poly omega_plus_monomial(const QScalars& s) {
  const auto coeffs = omega_plus_unprimed(s);
  return assemble_from_qc(s, coeffs, 0);
}

}  // namespace itqft
