#pragma once

// The reduction rho_{p,0} of the torus representation over F_p = Z[zeta_p]/(h),
// the SL(2, F_p) action on homogeneous polynomials of degree D = d - c - 1,
// and the diagonal intertwiner between them.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "itqft/prime.hpp"
#include "itqft/qint.hpp"
#include "itqft/rep.hpp"

namespace itqft {

namespace fp {

inline std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

inline std::int64_t pow(std::int64_t a, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  a = mod(a, p);
  while (e > 0) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

inline std::int64_t inv(std::int64_t a, std::int64_t p) {
  a = mod(a, p);
  if (a == 0) throw std::domain_error("no inverse of 0 in F_p");
  return pow(a, p - 2, p);
}

/// (-2)^e in F_p for any integer e.
inline std::int64_t neg2_pow(std::int64_t e, std::int64_t p) {
  const std::int64_t base = mod(-2, p);
  return e >= 0 ? pow(base, e, p) : inv(pow(base, -e, p), p);
}

inline std::int64_t factorial(std::int64_t n, std::int64_t p) {
  std::int64_t r = 1;
  for (std::int64_t k = 2; k <= n; ++k) r = r * (k % p) % p;
  return r;
}

/// n!! = n (n-2) ... ending in 1 or 2; (-1)!! = 0!! = 1.
inline std::int64_t double_factorial(std::int64_t n, std::int64_t p) {
  std::int64_t r = 1;
  for (std::int64_t k = n; k > 1; k -= 2) r = r * (k % p) % p;
  return r;
}

/// binomial(n, k) mod p, zero outside 0 <= k <= n; exact for n < p.
inline std::int64_t binomial(std::int64_t n, std::int64_t k, std::int64_t p) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t num = 1, den = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    num = num * mod(n - i, p) % p;
    den = den * mod(i + 1, p) % p;
  }
  return num * inv(den, p) % p;
}

}  // namespace fp

class FpMatrix {
 public:
  FpMatrix(int p, std::size_t n) : p_(p), n_(n), a_(n * n, 0) {}

  static FpMatrix identity(int p, std::size_t n) {
    FpMatrix r(p, n);
    for (std::size_t i = 0; i < n; ++i) r(i, i) = 1;
    return r;
  }

  int p() const noexcept { return p_; }
  std::size_t size() const noexcept { return n_; }

  std::int64_t& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  const std::vector<std::int64_t>& data() const noexcept { return a_; }

  friend FpMatrix operator*(const FpMatrix& x, const FpMatrix& y) {
    if (x.n_ != y.n_ || x.p_ != y.p_) throw std::invalid_argument("FpMatrix shape mismatch");
    FpMatrix r(x.p_, x.n_);
    for (std::size_t i = 0; i < x.n_; ++i)
      for (std::size_t k = 0; k < x.n_; ++k) {
        const std::int64_t xik = x(i, k);
        if (xik == 0) continue;
        for (std::size_t j = 0; j < x.n_; ++j) r(i, j) = (r(i, j) + xik * y(k, j)) % x.p_;
      }
    return r;
  }

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

  FpMatrix pow(unsigned long e) const {
    FpMatrix result = identity(p_, n_);
    FpMatrix base = *this;
    while (e) {
      if (e & 1u) result = result * base;
      e >>= 1u;
      if (e) base = base * base;
    }
    return result;
  }

  /// Gauss-Jordan inverse over F_p.
  FpMatrix inverse() const {
    const std::size_t n = n_;
    FpMatrix a = *this;
    FpMatrix r = identity(p_, n);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (piv < n && a(piv, col) == 0) ++piv;
      if (piv == n) throw std::domain_error("FpMatrix is singular");
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(col, j), a(piv, j));
        std::swap(r(col, j), r(piv, j));
      }
      const std::int64_t s = fp::inv(a(col, col), p_);
      for (std::size_t j = 0; j < n; ++j) {
        a(col, j) = a(col, j) * s % p_;
        r(col, j) = r(col, j) * s % p_;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (i == col || a(i, col) == 0) continue;
        const std::int64_t f = a(i, col);
        for (std::size_t j = 0; j < n; ++j) {
          a(i, j) = fp::mod(a(i, j) - f * a(col, j), p_);
          r(i, j) = fp::mod(r(i, j) - f * r(col, j), p_);
        }
      }
    }
    return r;
  }

 private:
  int p_;
  std::size_t n_;
  std::vector<std::int64_t> a_;
};

/// Entrywise reduction modulo h of an integral matrix.
inline FpMatrix reduce_mod_h(const RepMatrix& m) {
  FpMatrix r(m.p(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) r(i, j) = reduce_mod_h(m(i, j));
  return r;
}

struct Rho0 {
  FpMatrix t_hat;
  FpMatrix tstar_hat;
};

/// Closed forms for t and t* mod h, row m and column n:
///   t_hat(m,n)     = (-1)^(n-m) (2c+2n+1)!! / ((n-m)! (2c+2m+1)!!)   (m <= n)
///   tstar_hat(m,n) = (-2)^(n-m) binomial(m, n)                       (m >= n)
inline Rho0 rho0_closed(int p, int c) {
  const PrimeContext ctx(p);
  if (c < 0 || c > ctx.d() - 1) throw std::out_of_range("c must satisfy 0 <= c <= d-1");
  const auto rank = static_cast<std::size_t>(ctx.d() - c);
  Rho0 r{FpMatrix(p, rank), FpMatrix(p, rank)};
  for (std::size_t m = 0; m < rank; ++m)
    for (std::size_t n = 0; n < rank; ++n) {
      const auto mi = static_cast<std::int64_t>(m), ni = static_cast<std::int64_t>(n);
      if (m <= n) {
        const std::int64_t sign = ((ni - mi) % 2 == 0) ? 1 : p - 1;
        const std::int64_t num = fp::double_factorial(2 * c + 2 * ni + 1, p);
        const std::int64_t den = fp::factorial(ni - mi, p) * fp::double_factorial(2 * c + 2 * mi + 1, p) % p;
        r.t_hat(m, n) = sign * num % p * fp::inv(den, p) % p;
      }
      if (m >= n) r.tstar_hat(m, n) = fp::neg2_pow(ni - mi, p) * fp::binomial(mi, ni, p) % p;
    }
  return r;
}

class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// t_hat and t*_hat by reducing the exact matrices, checked against the
/// closed forms. Disagreement throws ConsistencyError.
inline Rho0 rho0_matrices(const QScalars& s, int c) {
  const RepMatrix ts = tstar_matrix(s, c);
  Rho0 reduced{reduce_mod_h(t_matrix(s, c, ts)), reduce_mod_h(ts)};
  const Rho0 closed = rho0_closed(s.p(), c);
  if (!(reduced.t_hat == closed.t_hat) || !(reduced.tstar_hat == closed.tstar_hat))
    throw ConsistencyError("reduction mod h disagrees with the closed forms at p=" +
                           std::to_string(s.p()) + ", c=" + std::to_string(c));
  return reduced;
}

/// An element [[a, b], [c, d]] of SL(2, F_p).
struct Sl2 {
  std::int64_t a, b, c, d;
};

inline Sl2 mul(const Sl2& x, const Sl2& y, std::int64_t p) {
  return Sl2{fp::mod(x.a * y.a + x.b * y.c, p), fp::mod(x.a * y.b + x.b * y.d, p),
             fp::mod(x.c * y.a + x.d * y.c, p), fp::mod(x.c * y.b + x.d * y.d, p)};
}

inline constexpr Sl2 kSl2T{1, 1, 0, 1};
inline constexpr Sl2 kSl2Tstar{1, 0, -1, 1};

/// Matrix of g on H_{p,D} in the basis (x^(D-n) y^n), n = 0..D, under
/// g . x^i y^j = (a x + c y)^i (b x + d y)^j.
inline FpMatrix poly_action(int p, const Sl2& g, int D) {
  if (fp::mod(g.a * g.d - g.b * g.c, p) != 1) throw std::invalid_argument("poly_action needs det(g) = 1");
  if (D < 0) throw std::invalid_argument("degree must be >= 0");
  const auto size = static_cast<std::size_t>(D + 1);
  FpMatrix r(p, size);
  // Coefficient lists indexed by the power of y.
  auto expand = [&](std::int64_t u, std::int64_t v, int k) {
    std::vector<std::int64_t> out(static_cast<std::size_t>(k + 1));
    for (int j = 0; j <= k; ++j)
      out[static_cast<std::size_t>(j)] = fp::binomial(k, j, p) * fp::pow(u, k - j, p) % p * fp::pow(v, j, p) % p;
    return out;
  };
  for (int n = 0; n <= D; ++n) {
    const auto left = expand(g.a, g.c, D - n);
    const auto right = expand(g.b, g.d, n);
    for (std::size_t i = 0; i < left.size(); ++i)
      for (std::size_t j = 0; j < right.size(); ++j) {
        auto& e = r(i + j, static_cast<std::size_t>(n));
        e = (e + left[i] * right[j]) % p;
      }
  }
  return r;
}

/// Diagonal isomorphism x^(D-n) y^n -> (-1)^n n! / (2c+2n+1)!! Q'_n.
inline FpMatrix phi_matrix(int p, int c) {
  const PrimeContext ctx(p);
  if (c < 0 || c > ctx.d() - 1) throw std::out_of_range("c must satisfy 0 <= c <= d-1");
  const auto rank = static_cast<std::size_t>(ctx.d() - c);
  FpMatrix r(p, rank);
  for (std::size_t n = 0; n < rank; ++n) {
    const auto ni = static_cast<std::int64_t>(n);
    const std::int64_t df = fp::double_factorial(2 * c + 2 * ni + 1, p);
    if (df == 0) throw std::domain_error("double factorial vanishes mod p");
    const std::int64_t sign = (n % 2 == 0) ? 1 : p - 1;
    r(n, n) = sign * fp::factorial(ni, p) % p * fp::inv(df, p) % p;
  }
  return r;
}

/// Phi T = t_hat Phi and Phi T* = t*_hat Phi on H_{p,D}, D = d - c - 1.
inline bool verify_intertwine(const Rho0& rho, int c) {
  const int p = rho.t_hat.p();
  const int D = static_cast<int>(rho.t_hat.size()) - 1;
  const FpMatrix phi = phi_matrix(p, c);
  return phi * poly_action(p, kSl2T, D) == rho.t_hat * phi &&
         phi * poly_action(p, kSl2Tstar, D) == rho.tstar_hat * phi;
}

inline bool verify_intertwine(const QScalars& s, int c) { return verify_intertwine(rho0_matrices(s, c), c); }

/// Dimension over F_p of the unital algebra generated by the given matrices.
inline std::size_t generated_algebra_dimension(const std::vector<FpMatrix>& gens) {
  if (gens.empty()) throw std::invalid_argument("need at least one generator");
  const int p = gens.front().p();
  const std::size_t n = gens.front().size();
  const std::size_t full = n * n;

  // Row-echelon basis of the span, stored with its pivot columns.
  std::vector<std::vector<std::int64_t>> basis;
  std::vector<std::size_t> pivots;
  auto try_add = [&](const FpMatrix& m) {
    std::vector<std::int64_t> v = m.data();
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const std::int64_t f = v[pivots[b]];
      if (f == 0) continue;
      for (std::size_t k = 0; k < full; ++k) v[k] = fp::mod(v[k] - f * basis[b][k], p);
    }
    std::size_t piv = 0;
    while (piv < full && v[piv] == 0) ++piv;
    if (piv == full) return false;
    const std::int64_t s = fp::inv(v[piv], p);
    for (auto& x : v) x = x * s % p;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const std::int64_t f = basis[b][piv];
      if (f == 0) continue;
      for (std::size_t k = 0; k < full; ++k) basis[b][k] = fp::mod(basis[b][k] - f * v[k], p);
    }
    basis.push_back(std::move(v));
    pivots.push_back(piv);
    return true;
  };

  std::vector<FpMatrix> frontier{FpMatrix::identity(p, n)};
  try_add(frontier.front());
  while (!frontier.empty() && basis.size() < full) {
    std::vector<FpMatrix> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        FpMatrix y = x * g;
        if (try_add(y)) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return basis.size();
}

/// Burnside certificate: t_hat and t*_hat generate all (d-c) x (d-c)
/// matrices over F_p, so the representation is (absolutely) irreducible.
inline bool irreducibility_check(const Rho0& rho) {
  const std::size_t n = rho.t_hat.size();
  return generated_algebra_dimension({rho.t_hat, rho.tstar_hat}) == n * n;
}

inline bool irreducibility_check(const QScalars& s, int c) { return irreducibility_check(rho0_matrices(s, c)); }

/// (-2)^(-k) (d-k-1)! (2k+1)!! = (d-1)! mod p for 0 <= k <= d-1.
inline bool u_lemma_check(int p) {
  const PrimeContext ctx(p);
  const std::int64_t d = ctx.d();
  const std::int64_t rhs = fp::factorial(d - 1, p);
  for (std::int64_t k = 0; k <= d - 1; ++k) {
    const std::int64_t lhs = fp::neg2_pow(-k, p) * fp::factorial(d - k - 1, p) % p * fp::double_factorial(2 * k + 1, p) % p;
    if (lhs != rhs) return false;
  }
  return true;
}

/// u_lemma_check for every prime 5 <= p <= max_p; returns the first failing
/// prime, or 0.
inline int u_lemma_first_failure(int max_p) {
  for (int p = 5; p <= max_p; ++p)
    if (is_prime(p) && !u_lemma_check(p)) return p;
  return 0;
}

}  // namespace itqft
