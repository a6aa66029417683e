#pragma once

#include <stdexcept>
#include <string>

namespace itqft {

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

/// An odd prime p >= 5 together with d = (p-1)/2. Every other object in the
/// library is tied to one of these.
class PrimeContext {
 public:
  explicit PrimeContext(int p) : p_(p), d_((p - 1) / 2) {
    if (p < 5 || !is_prime(p))
      throw std::invalid_argument("p must be a prime >= 5, got " + std::to_string(p));
  }

  int p() const noexcept { return p_; }
  int d() const noexcept { return d_; }

  friend bool operator==(const PrimeContext&, const PrimeContext&) = default;

 private:
  int p_;
  int d_;
};

}  // namespace itqft
