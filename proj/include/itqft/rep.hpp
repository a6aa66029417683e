#pragma once

// Matrices of the meridian twist t and the longitude twist t* on the rank
// d - c lattice of the colored one-holed torus, in the orthogonal basis
// Q'_n = Q_{n,c} / {n}!.
//
// Index convention: t(Q'_n) = sum_m a_{m,n} Q'_m is stored with a_{m,n} at
// row m, column n; t*(Q'_m) = sum_n b_{n,m} Q'_n with b_{n,m} at row n,
// column m. Hence t is upper and t* is lower triangular.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "itqft/cyclotomic.hpp"
#include "itqft/hadic.hpp"
#include "itqft/qint.hpp"
#include "itqft/skein_poly.hpp"

namespace itqft {

class RepMatrix {
 public:
  RepMatrix(int p, int c, std::size_t n) : p_(p), c_(c), n_(n), a_(n * n, CycNum(p)) {}

  static RepMatrix identity(int p, int c, std::size_t n) {
    RepMatrix r(p, c, n);
    for (std::size_t i = 0; i < n; ++i) r(i, i) = CycNum::from_int(p, 1);
    return r;
  }

  int p() const noexcept { return p_; }
  int c() const noexcept { return c_; }
  std::size_t size() const noexcept { return n_; }

  CycNum& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const CycNum& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  friend RepMatrix operator*(const RepMatrix& x, const RepMatrix& y) {
    if (x.n_ != y.n_ || x.p_ != y.p_) throw std::invalid_argument("RepMatrix shape mismatch");
    RepMatrix r(x.p_, x.c_, x.n_);
    for (std::size_t i = 0; i < x.n_; ++i)
      for (std::size_t k = 0; k < x.n_; ++k) {
        const CycNum& xik = x(i, k);
        if (xik.is_zero()) continue;
        for (std::size_t j = 0; j < x.n_; ++j)
          if (!y(k, j).is_zero()) r(i, j) += xik * y(k, j);
      }
    return r;
  }

  friend bool operator==(const RepMatrix& x, const RepMatrix& y) {
    return x.p_ == y.p_ && x.n_ == y.n_ && x.a_ == y.a_;
  }

  RepMatrix pow(unsigned long e) const {
    RepMatrix result = identity(p_, c_, n_);
    RepMatrix base = *this;
    while (e) {
      if (e & 1u) result = result * base;
      e >>= 1u;
      if (e) base = base * base;
    }
    return result;
  }

  RepMatrix scaled(const CycNum& s) const {
    RepMatrix r = *this;
    for (auto& x : r.a_) x *= s;
    return r;
  }

  std::vector<CycNum> diagonal() const {
    std::vector<CycNum> r;
    for (std::size_t i = 0; i < n_; ++i) r.push_back((*this)(i, i));
    return r;
  }

  bool is_upper_triangular() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (!(*this)(i, j).is_zero()) return false;
    return true;
  }
  bool is_lower_triangular() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if (!(*this)(i, j).is_zero()) return false;
    return true;
  }
  bool is_integral() const {
    for (const auto& x : a_)
      if (!x.is_integral()) return false;
    return true;
  }

 private:
  int p_;
  int c_;
  std::size_t n_;
  std::vector<CycNum> a_;
};

/// Entrywise h-adic truncation of a RepMatrix: a matrix over
/// Z[zeta_p]/(h^(N+1)).
class HDigitsMatrix {
 public:
  HDigitsMatrix(int p, int N, int c, std::size_t n)
      : p_(p), N_(N), c_(c), n_(n), a_(n * n, HDigits{p, N, std::vector<int>(static_cast<std::size_t>(N + 1), 0)}) {}

  static HDigitsMatrix truncate(const RepMatrix& m, int N) {
    HDigitsMatrix r(m.p(), N, m.c(), m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j) r(i, j) = itqft::truncate(m(i, j), N);
    return r;
  }

  int p() const noexcept { return p_; }
  int N() const noexcept { return N_; }
  int c() const noexcept { return c_; }
  std::size_t size() const noexcept { return n_; }

  HDigits& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const HDigits& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  /// Product over Z[zeta_p]/(h^(N+1)), via canonical lifts.
  friend HDigitsMatrix operator*(const HDigitsMatrix& x, const HDigitsMatrix& y) {
    if (x.n_ != y.n_ || x.p_ != y.p_ || x.N_ != y.N_) throw std::invalid_argument("HDigitsMatrix shape mismatch");
    RepMatrix lx(x.p_, x.c_, x.n_), ly(x.p_, x.c_, x.n_);
    for (std::size_t i = 0; i < x.n_; ++i)
      for (std::size_t j = 0; j < x.n_; ++j) {
        lx(i, j) = lift(x(i, j));
        ly(i, j) = lift(y(i, j));
      }
    return truncate(lx * ly, x.N_);
  }

  friend bool operator==(const HDigitsMatrix&, const HDigitsMatrix&) = default;

 private:
  int p_;
  int N_;
  int c_;
  std::size_t n_;
  std::vector<HDigits> a_;
};

inline int rank_of(const QScalars& s, int c) {
  if (c < 0 || c > s.d() - 1) throw std::out_of_range("c must satisfy 0 <= c <= d-1");
  return s.d() - c;
}

/// ((Q'_n, Q'_n)) = q^(-c(c+1)/2) {2c+2n+1}!! {2c+n+1}^+! / {n}!
///                  * ({c}_q!)^2 / ({1}_q {2c}_q!).
inline CycNum norm_qprime(const QScalars& s, int n, int c) {
  if (n < 0 || n >= rank_of(s, c)) throw std::out_of_range("norm_qprime index");
  const CycNum cq = s.brace_q_fact(c);
  CycNum x = s.q_pow(-(c * (c + 1) / 2)) * s.brace_dfact(2 * c + 2 * n + 1) *
             s.brace_plus_fact(2 * c + n + 1) * cq * cq;
  x *= s.brace_fact_inv(n) * s.brace_q_fact_inv(1) * s.brace_q_fact_inv(2 * c);
  if (!x.is_integral()) throw IntegralityError("norm of Q' is not integral");
  return x;
}

/// ((Q_n, Q_n)) in the unprimed basis, from its own closed form
///   q^(-c(c+1)/2) {n}! {2c+2n+1}!! {2c+n+1}^+! ({c}_q!)^2 / ({1}_q {2c}_q!).
inline CycNum norm_q(const QScalars& s, int n, int c) {
  if (n < 0 || n >= rank_of(s, c)) throw std::out_of_range("norm_q index");
  const CycNum cq = s.brace_q_fact(c);
  CycNum x = s.q_pow(-(c * (c + 1) / 2)) * s.brace_fact(n) * s.brace_dfact(2 * c + 2 * n + 1) *
             s.brace_plus_fact(2 * c + n + 1) * cq * cq;
  x *= s.brace_q_fact_inv(1) * s.brace_q_fact_inv(2 * c);
  if (!x.is_integral()) throw IntegralityError("norm of Q is not integral");
  return x;
}

/// R_{n,m} = ((Q'_n,Q'_n)) / ((Q'_m,Q'_m))
///         = {m}!{2c+2n+1}!!{2c+n+1}^+! / ({n}!{2c+2m+1}!!{2c+m+1}^+!), a unit.
inline CycNum ratio_r(const QScalars& s, int n, int m, int c) {
  const int rank = rank_of(s, c);
  if (n < 0 || m < 0 || n >= rank || m >= rank) throw std::out_of_range("ratio_r index");
  CycNum x = s.brace_fact(m) * s.brace_dfact(2 * c + 2 * n + 1) * s.brace_plus_fact(2 * c + n + 1);
  x *= s.brace_fact_inv(n) * s.brace_dfact_inv(2 * c + 2 * m + 1) * s.brace_plus_fact_inv(2 * c + m + 1);
  if (!x.is_integral()) throw IntegralityError("R_{n,m} is not integral");
  return x;
}

/// b_{n,m,l} = C^l_{l+n-m, m+c} gamma_{l+n-m} / {l+n-m}! * {n}! / {m}!, ~ h^l.
inline CycNum b_term(const QScalars& s, int n, int m, int l, int c) {
  const int rank = rank_of(s, c);
  if (m < 0 || m > n || n >= rank || l < 0 || l > m + c) throw std::out_of_range("b_term index");
  const int k = l + n - m;
  CycNum x = c_closed(s, l, k, m + c) * s.gamma(k) * s.brace_fact(n);
  x *= s.brace_fact_inv(k) * s.brace_fact_inv(m);
  if (!x.is_integral()) throw IntegralityError("b_{n,m,l} is not integral");
  return x;
}

/// Coefficient of Q'_n in t*(Q'_m); zero above the diagonal.
inline CycNum b_entry(const QScalars& s, int n, int m, int c) {
  const int rank = rank_of(s, c);
  if (n < 0 || m < 0 || n >= rank || m >= rank) throw std::out_of_range("b_entry index");
  CycNum acc = s.zero();
  if (m > n) return acc;
  for (int l = 0; l <= m + c; ++l) acc += b_term(s, n, m, l, c);
  return acc;
}

/// Coefficient of Q'_m in t(Q'_n), a_{m,n} = R_{n,m} b_{n,m}; zero below the
/// diagonal.
inline CycNum a_entry(const QScalars& s, int m, int n, int c) {
  const int rank = rank_of(s, c);
  if (n < 0 || m < 0 || n >= rank || m >= rank) throw std::out_of_range("a_entry index");
  if (m > n) return s.zero();
  return ratio_r(s, n, m, c) * b_entry(s, n, m, c);
}

inline RepMatrix tstar_matrix(const QScalars& s, int c) {
  const int rank = rank_of(s, c);
  RepMatrix r(s.p(), c, static_cast<std::size_t>(rank));
  for (int m = 0; m < rank; ++m)
    for (int n = m; n < rank; ++n)
      r(static_cast<std::size_t>(n), static_cast<std::size_t>(m)) = b_entry(s, n, m, c);
  return r;
}

/// t from an already computed t*, via a_{m,n} = R_{n,m} b_{n,m}.
inline RepMatrix t_matrix(const QScalars& s, int c, const RepMatrix& b) {
  const int rank = rank_of(s, c);
  if (b.size() != static_cast<std::size_t>(rank)) throw std::invalid_argument("t* has wrong rank");
  RepMatrix r(s.p(), c, static_cast<std::size_t>(rank));
  for (int m = 0; m < rank; ++m)
    for (int n = m; n < rank; ++n) {
      const auto um = static_cast<std::size_t>(m), un = static_cast<std::size_t>(n);
      r(um, un) = ratio_r(s, n, m, c) * b(un, um);
    }
  return r;
}

inline RepMatrix t_matrix(const QScalars& s, int c) { return t_matrix(s, c, tstar_matrix(s, c)); }

/// Matrix of x -> x * omega_+ computed in the polynomial quotient model,
/// independently of the closed forms behind tstar_matrix.
inline RepMatrix tstar_oracle(const QScalars& s, int c) {
  const int rank = rank_of(s, c);
  const Poly omega = omega_plus_monomial(s);
  RepMatrix r(s.p(), c, static_cast<std::size_t>(rank));
  for (int m = 0; m < rank; ++m) {
    QPoly x = qpoly_basis(s, c, m);
    x.coeffs[static_cast<std::size_t>(m)] = s.brace_fact_inv(m);
    const QPoly y = multiply_mod(s, x, omega);
    for (int n = 0; n < rank; ++n)
      r(static_cast<std::size_t>(n), static_cast<std::size_t>(m)) =
          y.coeffs[static_cast<std::size_t>(n)] * s.brace_fact(n);
  }
  return r;
}

/// Exact inverse of a triangular matrix whose diagonal entries are units.
inline RepMatrix invert(const RepMatrix& m) {
  const bool upper = m.is_upper_triangular();
  const bool lower = m.is_lower_triangular();
  if (!upper && !lower) throw std::invalid_argument("invert expects a triangular matrix");
  const std::size_t n = m.size();
  const CycNum one = CycNum::from_int(m.p(), 1);
  std::vector<CycNum> diag_inv;
  for (std::size_t i = 0; i < n; ++i) {
    auto u = exact_div(one, m(i, i));
    if (!u) throw std::domain_error("invert: diagonal entry is not a unit");
    diag_inv.push_back(*std::move(u));
  }
  RepMatrix r(m.p(), m.c(), n);
  for (std::size_t j = 0; j < n; ++j) {
    if (upper) {
      for (std::size_t i = n; i-- > 0;) {
        CycNum acc = (i == j) ? one : CycNum(m.p());
        for (std::size_t k = i + 1; k < n; ++k) acc -= m(i, k) * r(k, j);
        r(i, j) = acc * diag_inv[i];
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        CycNum acc = (i == j) ? one : CycNum(m.p());
        for (std::size_t k = 0; k < i; ++k) acc -= m(i, k) * r(k, j);
        r(i, j) = acc * diag_inv[i];
      }
    }
  }
  return r;
}

enum class Letter { T, S, TInv, SInv };

/// Parses a word over {T, S, t, s}; lowercase letters are inverses.
inline std::vector<Letter> parse_word(std::string_view word) {
  std::vector<Letter> out;
  out.reserve(word.size());
  for (char ch : word) {
    switch (ch) {
      case 'T': out.push_back(Letter::T); break;
      case 'S': out.push_back(Letter::S); break;
      case 't': out.push_back(Letter::TInv); break;
      case 's': out.push_back(Letter::SInv); break;
      default:
        throw std::invalid_argument(std::string("invalid word letter '") + ch + "' (expected T, S, t, s)");
    }
  }
  return out;
}

/// The pair (t, t*) for one color parameter c, with cached inverses.
class TorusRep {
 public:
  TorusRep(const QScalars& s, int c)
      : c_(c),
        tstar_(tstar_matrix(s, c)),
        t_(t_matrix(s, c, tstar_)),
        t_inv_(invert(t_)),
        tstar_inv_(invert(tstar_)) {}

  int p() const noexcept { return t_.p(); }
  int c() const noexcept { return c_; }
  std::size_t rank() const noexcept { return t_.size(); }

  const RepMatrix& t() const noexcept { return t_; }
  const RepMatrix& tstar() const noexcept { return tstar_; }
  const RepMatrix& t_inv() const noexcept { return t_inv_; }
  const RepMatrix& tstar_inv() const noexcept { return tstar_inv_; }

  const RepMatrix& generator(Letter x) const noexcept {
    switch (x) {
      case Letter::T: return t_;
      case Letter::S: return tstar_;
      case Letter::TInv: return t_inv_;
      case Letter::SInv: return tstar_inv_;
    }
    return t_;
  }

  /// Exact product of the generators, read left to right.
  RepMatrix eval(std::span<const Letter> word) const {
    RepMatrix r = RepMatrix::identity(p(), c_, rank());
    for (Letter x : word) r = r * generator(x);
    return r;
  }
  RepMatrix eval(std::string_view word) const { return eval(parse_word(word)); }

  /// The exact product truncated entrywise modulo h^(N+1).
  HDigitsMatrix eval_truncated(std::string_view word, int N) const {
    return HDigitsMatrix::truncate(eval(word), N);
  }

 private:
  int c_;
  RepMatrix tstar_;
  RepMatrix t_;
  RepMatrix t_inv_;
  RepMatrix tstar_inv_;
};

/// Exponent e in (t t* t)^4 = q^e, reduced to {0, ..., p-1}.
inline int central_exponent(int p, int c) {
  const long e = -6L + 2L * c * (c + 1) - static_cast<long>(p) * (p + 1) / 2;
  return static_cast<int>(((e % p) + p) % p);
}

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::vector<Check> checks;

  void add(std::string name, bool pass, std::string detail = {}) {
    checks.push_back(Check{std::move(name), pass, std::move(detail)});
  }
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Exact relation checks for one (p, c).
inline Report verify_relations(const QScalars& s, int c) {
  Report rep;
  const TorusRep r(s, c);
  const RepMatrix& t = r.t();
  const RepMatrix& ts = r.tstar();
  const std::size_t n = r.rank();
  const RepMatrix id = RepMatrix::identity(s.p(), c, n);

  rep.add("integral", t.is_integral() && ts.is_integral());
  rep.add("triangular", t.is_upper_triangular() && ts.is_lower_triangular());

  const RepMatrix tst = t * ts * t;
  rep.add("braid", tst == ts * t * ts, "t t* t = t* t t*");

  const int e = central_exponent(s.p(), c);
  rep.add("central", tst.pow(4) == id.scaled(s.q_pow(e)), "(t t* t)^4 = q^" + std::to_string(e));
  rep.add("delta_twist", (t * ts).pow(6) == tst.pow(4), "(t t*)^6 = (t t* t)^4");

  rep.add("order_t", t.pow(static_cast<unsigned long>(s.p())) == id, "t^p = I");
  rep.add("order_tstar", ts.pow(static_cast<unsigned long>(s.p())) == id, "t*^p = I");
  rep.add("inverse_t", r.t_inv() == t.pow(static_cast<unsigned long>(s.p() - 1)), "t^-1 = t^(p-1)");

  bool diag_t = true, diag_ts = true;
  for (std::size_t i = 0; i < n; ++i) {
    const CycNum mu = s.mu(c + static_cast<long>(i));
    diag_t = diag_t && t(i, i) == mu;
    diag_ts = diag_ts && ts(i, i) == mu;
  }
  rep.add("spectrum_t", diag_t, "diag(t) = (mu_c, ..., mu_{d-1})");
  rep.add("spectrum_tstar", diag_ts, "diag(t*) = (mu_c, ..., mu_{d-1})");

  rep.add("tstar_oracle", ts == tstar_oracle(s, c), "closed-form t* = multiplication by omega_+");

  bool adjoint = true;
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t k = m; k < n; ++k)
      adjoint = adjoint && t(m, k) * norm_qprime(s, static_cast<int>(m), c) ==
                               ts(k, m) * norm_qprime(s, static_cast<int>(k), c);
  rep.add("adjoint", adjoint, "a_{m,n} N_m = b_{n,m} N_n");
  return rep;
}

}  // namespace itqft
