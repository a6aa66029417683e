#include <gtest/gtest.h>

#include "itqft/skein_poly.hpp"
#include "oracles.hpp"

using itqft::CycNum;
using itqft::Poly;
using itqft::QScalars;

namespace {

constexpr int kPrimes[] = {5, 7, 11, 13};

// Q_{n,c} by direct multiplication of linear factors written out from lambda.
Poly q_oracle(const QScalars& s, int n, int c) {
  Poly r{s.one()};
  for (int i = c; i < c + n; ++i) {
    const CycNum root = -(oracle::zeta(s.p(), i + 1) + oracle::zeta(s.p(), -i - 1));
    Poly next(r.size() + 1, s.zero());
    for (std::size_t k = 0; k < r.size(); ++k) {
      next[k + 1] += r[k];
      next[k] -= root * r[k];
    }
    r = std::move(next);
  }
  return r;
}

// Coordinates by peeling off the leading term against monic Q_{k,c}.
std::vector<CycNum> expand_oracle(const QScalars& s, Poly poly, int c) {
  itqft::trim_poly(poly);
  std::vector<CycNum> out(poly.size(), s.zero());
  for (std::size_t k = poly.size(); k-- > 0;) {
    const CycNum lead = poly[k];
    out[k] = lead;
    const Poly q = q_oracle(s, static_cast<int>(k), c);
    for (std::size_t i = 0; i <= k; ++i) poly[i] -= lead * q[i];
  }
  return out;
}

bool distinct(const std::vector<CycNum>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] == v[j]) return false;
  return true;
}

}  // namespace

TEST(SkeinPoly, QMonomials) {
  const QScalars s(7);
  EXPECT_TRUE(itqft::poly_equal(itqft::q_poly_monomial(s, 0, 3), Poly{s.one()}));
  EXPECT_TRUE(itqft::poly_equal(itqft::q_poly_monomial(s, 1, 0), Poly{-s.lambda(0), s.one()}));
  EXPECT_TRUE(itqft::poly_equal(itqft::q_poly_monomial(s, 2, 0),
                                Poly{s.lambda(0) * s.lambda(1), -(s.lambda(0) + s.lambda(1)), s.one()}));
  for (int c = 0; c < 4; ++c)
    for (int n = 0; n < 5; ++n) EXPECT_TRUE(itqft::poly_equal(itqft::q_poly_monomial(s, n, c), q_oracle(s, n, c)));
}

TEST(SkeinPoly, RoundTrip) {
  for (int p : {5, 7, 11}) {
    const QScalars s(p);
    for (int c = 0; c < s.d(); ++c)
      for (int n = 0; n + c < p; ++n) {
        const auto e = itqft::expand_in_qc(s, itqft::q_poly_monomial(s, n, c), c);
        ASSERT_EQ(e.size(), static_cast<std::size_t>(n + 1));
        for (int k = 0; k <= n; ++k) EXPECT_EQ(e[static_cast<std::size_t>(k)], k == n ? s.one() : s.zero());
      }
  }
}

TEST(SkeinPoly, TimesZ) {
  const QScalars s(11);
  for (int c = 0; c < 3; ++c)
    for (int n = 0; n < 5; ++n) {
      const auto e = itqft::expand_in_qc(s, itqft::poly_mul(Poly{s.zero(), s.one()}, itqft::q_poly_monomial(s, n, c)), c);
      ASSERT_EQ(e.size(), static_cast<std::size_t>(n + 2));
      EXPECT_EQ(e[static_cast<std::size_t>(n + 1)], s.one());
      EXPECT_EQ(e[static_cast<std::size_t>(n)], s.lambda(c + n));
    }
}

TEST(SkeinPoly, ExpandMatchesOracles) {
  for (int p : {5, 7}) {
    const QScalars s(p);
    for (int c = 0; c < p; ++c)
      for (int m = 0; m + c < p; ++m)
        for (int n = 0; m + n + c < p; ++n) {
          const Poly prod = itqft::poly_mul(q_oracle(s, m, 0), q_oracle(s, n, c));
          const auto got = itqft::expand_in_qc(s, prod, c);
          EXPECT_EQ(got, expand_oracle(s, prod, c));
          std::vector<CycNum> nodes;
          for (int i = c; i <= c + m + n; ++i) nodes.push_back(s.lambda(i));
          if (distinct(nodes)) {
            EXPECT_EQ(got, oracle::divided_differences(prod, nodes));
          }
        }
  }
}

TEST(SkeinPoly, QOneSquared) {
  for (int p : kPrimes) {
    const QScalars s(p);
    const auto e = itqft::expand_in_qc(s, itqft::poly_mul(q_oracle(s, 1, 0), q_oracle(s, 1, 0)), 0);
    ASSERT_EQ(e.size(), 3u);
    EXPECT_TRUE(e[0].is_zero());
    EXPECT_EQ(e[1], -(s.brace(1) * s.brace(3)));
    EXPECT_EQ(e[2], s.one());
    EXPECT_EQ(itqft::c_closed(s, 1, 1, 1), -(s.brace(1) * s.brace(3)));
  }
}

TEST(SkeinPoly, CTrivialCases) {
  for (int p : kPrimes) {
    const QScalars s(p);
    for (int m = 0; m < p; ++m)
      for (int n = 0; n < p; ++n) {
        EXPECT_EQ(itqft::c_closed(s, 0, m, n), s.one());
        EXPECT_EQ(itqft::c_recursive(s, 0, m, n), s.one());
      }
  }
}

TEST(SkeinPoly, CMatchesExpansion) {
  // Q_m Q_n = sum_l C^l_{m,n} Q_{m+n-l}, read off from the oracle expansion.
  for (int p : {5, 7, 11}) {
    const QScalars s(p);
    for (int m = 0; m < p; ++m)
      for (int n = 0; m + n < p; ++n) {
        const auto e = expand_oracle(s, itqft::poly_mul(q_oracle(s, m, 0), q_oracle(s, n, 0)), 0);
        for (int l = 0; l <= std::min(m, n); ++l)
          EXPECT_EQ(itqft::c_closed(s, l, m, n), e[static_cast<std::size_t>(m + n - l)]);
      }
  }
}

TEST(SkeinPoly, CClosedEqualsRecursive) {
  for (int p : kPrimes) {
    const QScalars s(p);
    for (int m = 0; m < p; ++m)
      for (int n = 0; n < p; ++n)
        for (int l = 0; l <= std::min(m, n); ++l)
          EXPECT_EQ(itqft::c_closed(s, l, m, n), itqft::c_recursive(s, l, m, n));
  }
}

TEST(SkeinPoly, CValuation) {
  for (int p : kPrimes) {
    const QScalars s(p);
    for (int m = 0; m < p; ++m)
      for (int n = 0; n < p; ++n)
        for (int l = 0; l <= std::min(m, n); ++l) {
          const CycNum cl = itqft::c_closed(s, l, m, n);
          if (m + n + 1 >= p && cl.is_zero()) continue;
          EXPECT_EQ(itqft::h_valuation(cl), 2 * l) << p << ' ' << l << ' ' << m << ' ' << n;
        }
  }
}

TEST(SkeinPoly, BetaIsLambdaDifference) {
  const QScalars s(13);
  for (int m = 0; m < 13; ++m)
    for (int n = 0; n < 13; ++n) EXPECT_EQ(itqft::beta(s, m, n), s.lambda(m) - s.lambda(n));
}

TEST(SkeinPoly, AllTriples) {
  for (int p : kPrimes) {
    const QScalars s(p);
    for (int c = 0; c < p; ++c)
      for (int m = 0; m + c < p; ++m)
        for (int n = 0; m + n + c < p; ++n) EXPECT_TRUE(itqft::verify_product_expansion(s, m, n, c)) << p << ' ' << m << ' ' << n << ' ' << c;
  }
  EXPECT_THROW(itqft::verify_product_expansion(QScalars(5), 3, 2, 0), std::out_of_range);
}

TEST(SkeinPoly, MultiplyMod) {
  for (int p : {5, 7, 11}) {
    const QScalars s(p);
    for (int c = 0; c < s.d(); ++c) {
      const int top = s.d() - c - 1;
      for (int n = 0; n <= top; ++n) {
        const auto x = itqft::qpoly_basis(s, c, n);
        EXPECT_EQ(itqft::multiply_mod(s, x, Poly{s.one()}), x);
      }
      auto expect = itqft::qpoly_basis(s, c, top);
      expect.coeffs[static_cast<std::size_t>(top)] = s.lambda(s.d() - 1);
      EXPECT_EQ(itqft::multiply_mod(s, itqft::qpoly_basis(s, c, top), Poly{s.zero(), s.one()}), expect);
    }
  }
}

TEST(SkeinPoly, OmegaPlus) {
  for (int p : kPrimes) {
    const QScalars s(p);
    const auto g = itqft::omega_plus_coeffs(s);
    ASSERT_EQ(g.size(), static_cast<std::size_t>(s.d()));
    EXPECT_EQ(g[0], s.one());
    long expect = 1;
    const long half_neg = (p - 1) / 2;  // (-2)^-1 = (p-1)/2 mod p
    for (std::size_t m = 0; m < g.size(); ++m) {
      EXPECT_EQ(itqft::reduce_mod_h(g[m]), expect);
      expect = expect * half_neg % p;
    }
    const auto expanded = itqft::expand_in_qc(s, itqft::omega_plus_monomial(s), 0);
    EXPECT_EQ(expanded, itqft::omega_plus_unprimed(s));
  }
}
