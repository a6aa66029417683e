#pragma once

// Exact arithmetic in Q(zeta_p) and Z[zeta_p].
//
// Elements are stored in the power basis {1, zeta, ..., zeta^(p-2)} as integer
// numerators over one positive common denominator, always reduced via
// zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)) and gcd-normalized. Equality is
// therefore coefficientwise, and an element lies in Z[zeta_p] iff its
// denominator is 1.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace itqft {

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero in Q(zeta_p)") {}
};

/// Raised when an exact division that must succeed by construction does not.
/// Indicates an arithmetic bug rather than bad input.
class IntegralityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class CycNum {
 public:
  /// The zero element for the prime p.
  explicit CycNum(int p) : p_(p), num_(static_cast<std::size_t>(p - 1)), den_(1) {}

  static CycNum from_int(int p, const mpz_class& n) {
    CycNum x(p);
    x.num_[0] = n;
    return x;
  }

  /// Numerators in the power basis (length p-1) over a common denominator.
  static CycNum from_coeffs(int p, std::vector<mpz_class> nums, mpz_class den = 1) {
    if (nums.size() != static_cast<std::size_t>(p - 1))
      throw std::invalid_argument("CycNum needs exactly p-1 coefficients");
    if (den == 0) throw DivisionByZero();
    CycNum x(p);
    x.num_ = std::move(nums);
    x.den_ = std::move(den);
    if (x.den_ < 0) {
      x.den_ = -x.den_;
      for (auto& c : x.num_) c = -c;
    }
    x.normalize();
    return x;
  }

  static CycNum from_rationals(int p, std::span<const mpq_class> coeffs) {
    if (coeffs.size() != static_cast<std::size_t>(p - 1))
      throw std::invalid_argument("CycNum needs exactly p-1 coefficients");
    mpz_class den = 1;
    for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> nums(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      nums[i] = coeffs[i].get_num() * (den / coeffs[i].get_den());
    return from_coeffs(p, std::move(nums), std::move(den));
  }

  int p() const noexcept { return p_; }
  std::size_t size() const noexcept { return num_.size(); }
  const mpz_class& numerator(std::size_t i) const { return num_.at(i); }
  const mpz_class& denominator() const noexcept { return den_; }
  mpq_class coeff(std::size_t i) const {
    mpq_class r(num_.at(i), den_);
    r.canonicalize();
    return r;
  }

  bool is_zero() const {
    for (const auto& c : num_)
      if (c != 0) return false;
    return true;
  }
  bool is_integral() const { return den_ == 1; }

  CycNum operator-() const {
    CycNum r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
  }

  CycNum& operator+=(const CycNum& o) {
    check_same(o);
    if (den_ == o.den_) {
      for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += o.num_[i];
    } else {
      for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * o.den_ + o.num_[i] * den_;
      den_ *= o.den_;
    }
    normalize();
    return *this;
  }
  CycNum& operator-=(const CycNum& o) { return *this += -o; }

  CycNum& operator*=(const CycNum& o) {
    check_same(o);
    const auto p = static_cast<std::size_t>(p_);
    std::vector<mpz_class> buf(p);
    for (std::size_t i = 0; i + 1 < p; ++i) {
      if (num_[i] == 0) continue;
      for (std::size_t j = 0; j + 1 < p; ++j) {
        if (o.num_[j] == 0) continue;
        std::size_t k = i + j;
        if (k >= p) k -= p;
        mpz_addmul(buf[k].get_mpz_t(), num_[i].get_mpz_t(), o.num_[j].get_mpz_t());
      }
    }
    for (std::size_t i = 0; i + 1 < p; ++i) num_[i] = buf[i] - buf[p - 1];
    den_ *= o.den_;
    normalize();
    return *this;
  }

  CycNum& operator*=(long k) {
    for (auto& c : num_) c *= k;
    normalize();
    return *this;
  }

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator*(CycNum a, long k) { return a *= k; }
  friend CycNum operator*(long k, CycNum a) { return a *= k; }

  friend bool operator==(const CycNum& a, const CycNum& b) {
    return a.p_ == b.p_ && a.den_ == b.den_ && a.num_ == b.num_;
  }

  CycNum pow(unsigned long e) const {
    CycNum result = from_int(p_, 1);
    CycNum base = *this;
    while (e) {
      if (e & 1u) result *= base;
      e >>= 1u;
      if (e) base *= base;
    }
    return result;
  }

  /// Field inverse, computed by the extended Euclidean algorithm against the
  /// p-th cyclotomic polynomial over Q.
  CycNum inverse() const;

  /// The Galois automorphism zeta -> zeta^k, for k not divisible by p.
  CycNum galois(long k) const;

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < num_.size(); ++i) {
      if (i) s += ", ";
      s += num_[i].get_str();
    }
    s += "]";
    if (den_ != 1) s += "/" + den_.get_str();
    return s;
  }

 private:
  void check_same(const CycNum& o) const {
    if (o.p_ != p_) throw std::invalid_argument("CycNum operands belong to different primes");
  }

  void normalize() {
    if (is_zero()) {
      den_ = 1;
      return;
    }
    if (den_ == 1) return;
    mpz_class g = den_;
    for (const auto& c : num_) {
      if (c == 0) continue;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) return;
    }
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }

  int p_;
  std::vector<mpz_class> num_;
  mpz_class den_;
};

namespace detail {

using RatPoly = std::vector<mpq_class>;

inline void trim(RatPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Long division a = q*b + r over Q; b must be nonzero and trimmed.
inline std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  trim(a);
  RatPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  const mpq_class& lead = b.back();
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    mpq_class f = a.back() / lead;
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return {std::move(q), std::move(a)};
}

inline RatPoly mul_sub(const RatPoly& s0, const RatPoly& q, const RatPoly& s1) {
  RatPoly r(std::max(s0.size(), q.size() + s1.size()));
  for (std::size_t i = 0; i < s0.size(); ++i) r[i] = s0[i];
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < s1.size(); ++j) r[i + j] -= q[i] * s1[j];
  trim(r);
  return r;
}

}  // namespace detail

inline CycNum CycNum::inverse() const {
  if (is_zero()) throw DivisionByZero();
  const auto n = static_cast<std::size_t>(p_ - 1);
  detail::RatPoly r0(n + 1, mpq_class(1));  // 1 + x + ... + x^(p-1)
  detail::RatPoly r1(n);
  for (std::size_t i = 0; i < n; ++i) {
    r1[i] = mpq_class(num_[i], den_);
    r1[i].canonicalize();
  }
  detail::trim(r1);
  detail::RatPoly s0;
  detail::RatPoly s1{mpq_class(1)};
  while (!r1.empty()) {
    auto [q, r] = detail::divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    auto s2 = detail::mul_sub(s0, q, s1);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant because the cyclotomic polynomial is irreducible.
  if (r0.size() != 1) throw IntegralityError("cyclotomic gcd is not a unit");
  std::vector<mpq_class> out(n, mpq_class(0));
  for (std::size_t i = 0; i < s0.size() && i < n; ++i) out[i] = s0[i] / r0[0];
  if (s0.size() > n) throw IntegralityError("Bezout coefficient has unexpected degree");
  return from_rationals(p_, out);
}

inline CycNum CycNum::galois(long k) const {
  long kk = ((k % p_) + p_) % p_;
  if (kk == 0) throw std::invalid_argument("galois exponent must be prime to p");
  const auto p = static_cast<std::size_t>(p_);
  std::vector<mpz_class> buf(p);
  for (std::size_t i = 0; i + 1 < p; ++i) buf[(i * static_cast<std::size_t>(kk)) % p] += num_[i];
  std::vector<mpz_class> nums(p - 1);
  for (std::size_t i = 0; i + 1 < p; ++i) nums[i] = buf[i] - buf[p - 1];
  return from_coeffs(p_, std::move(nums), den_);
}

/// zeta_p^k for any integer k (negative k via zeta^-1 = zeta^(p-1)).
inline CycNum zeta_pow(int p, long k) {
  const long r = ((k % p) + p) % p;
  std::vector<mpz_class> nums(static_cast<std::size_t>(p - 1));
  if (r == p - 1) {
    for (auto& c : nums) c = -1;
  } else {
    nums[static_cast<std::size_t>(r)] = 1;
  }
  return CycNum::from_coeffs(p, std::move(nums));
}

/// The prime h = 1 - zeta_p of Z[zeta_p].
inline CycNum h_element(int p) { return CycNum::from_int(p, 1) - zeta_pow(p, 1); }

/// 1/h = (1/p) * sum_{i=0}^{p-2} (p-1-i) zeta^i.
inline CycNum h_inverse(int p) {
  std::vector<mpz_class> nums(static_cast<std::size_t>(p - 1));
  for (int i = 0; i < p - 1; ++i) nums[static_cast<std::size_t>(i)] = p - 1 - i;
  return CycNum::from_coeffs(p, std::move(nums), p);
}

/// The quotient x/y if it lies in Z[zeta_p]; empty otherwise.
/// Throws DivisionByZero for y = 0.
inline std::optional<CycNum> exact_div(const CycNum& x, const CycNum& y) {
  if (y.is_zero()) throw DivisionByZero();
  if (!x.is_integral() || !y.is_integral())
    throw std::invalid_argument("exact_div expects integral operands");
  CycNum q = x * y.inverse();
  if (!q.is_integral()) return std::nullopt;
  return q;
}

/// exact_div that must succeed; failure is an arithmetic bug.
inline CycNum exact_div_or_throw(const CycNum& x, const CycNum& y, const char* what) {
  auto q = exact_div(x, y);
  if (!q) throw IntegralityError(std::string("non-integral quotient: ") + what);
  return *std::move(q);
}

/// Multiplies by a known inverse and asserts the result is integral.
inline CycNum times_inverse_integral(const CycNum& x, const CycNum& y_inv, const char* what) {
  CycNum q = x * y_inv;
  if (!q.is_integral()) throw IntegralityError(std::string("non-integral quotient: ") + what);
  return q;
}

/// x/h if x is divisible by h in Z[zeta_p].
inline std::optional<CycNum> exact_div_h(const CycNum& x, const CycNum& h_inv) {
  CycNum q = x * h_inv;
  if (!q.is_integral()) return std::nullopt;
  return q;
}

inline constexpr int kInfiniteValuation = std::numeric_limits<int>::max();

/// Largest k with h^k | x in Z[zeta_p]; kInfiniteValuation for x = 0.
inline int h_valuation(const CycNum& x) {
  if (!x.is_integral()) throw std::domain_error("h_valuation of a non-integral element");
  if (x.is_zero()) return kInfiniteValuation;
  const CycNum h_inv = h_inverse(x.p());
  int k = 0;
  CycNum cur = x;
  while (auto next = exact_div_h(cur, h_inv)) {
    cur = *std::move(next);
    ++k;
  }
  return k;
}

/// x ~ y: each divides the other in Z[zeta_p].
inline bool is_associate(const CycNum& x, const CycNum& y) {
  const bool xz = x.is_zero();
  const bool yz = y.is_zero();
  if (xz || yz) return xz && yz;
  return exact_div(x, y).has_value() && exact_div(y, x).has_value();
}

/// Image in Z[zeta_p]/(h) = F_p: zeta -> 1, then reduce mod p.
inline int reduce_mod_h(const CycNum& x) {
  if (!x.is_integral()) throw std::domain_error("reduce_mod_h of a non-integral element");
  mpz_class s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x.numerator(i);
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), s.get_mpz_t(), static_cast<unsigned long>(x.p()));
  return static_cast<int>(r.get_si());
}

}  // namespace itqft
