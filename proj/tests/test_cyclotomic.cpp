#include <gtest/gtest.h>

#include <random>

#include "itqft/cyclotomic.hpp"
#include "itqft/hadic.hpp"
#include "oracles.hpp"

using itqft::CycNum;

namespace {

CycNum vec(int p, std::vector<long> c) {
  std::vector<mpz_class> z(c.begin(), c.end());
  z.resize(static_cast<std::size_t>(p - 1), 0);
  return CycNum::from_coeffs(p, z);
}

constexpr int kPrimes[] = {5, 7, 11, 13};

}  // namespace

TEST(Cyclotomic, ZetaPowers) {
  for (int p : kPrimes) {
    EXPECT_EQ(itqft::zeta_pow(p, 0), CycNum::from_int(p, 1));
    EXPECT_EQ(itqft::zeta_pow(p, p), CycNum::from_int(p, 1));
    for (long k = -2 * p; k <= 2 * p; ++k) EXPECT_EQ(itqft::zeta_pow(p, k), oracle::zeta(p, k));
  }
}

TEST(Cyclotomic, HSquaredAtFive) {
  const CycNum h = itqft::h_element(5);
  EXPECT_EQ(h * h, vec(5, {1, -2, 1}));
}

TEST(Cyclotomic, FoldsTopPower) {
  // zeta^2 * zeta^2 = zeta^4 = -(1 + zeta + zeta^2 + zeta^3) at p = 5.
  EXPECT_EQ(itqft::zeta_pow(5, 2) * itqft::zeta_pow(5, 2), vec(5, {-1, -1, -1, -1}));
}

TEST(Cyclotomic, RingAxiomsRandom) {
  std::mt19937_64 rng(11);
  for (int p : kPrimes)
    for (int k = 0; k < 20; ++k) {
      const CycNum a = oracle::random_integral(p, rng), b = oracle::random_integral(p, rng),
                   c = oracle::random_integral(p, rng);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      EXPECT_TRUE((a - a).is_zero());
    }
}

TEST(Cyclotomic, InverseMatchesNormOracle) {
  std::mt19937_64 rng(12);
  for (int p : {5, 7}) {
    for (int k = 0; k < 10; ++k) {
      const CycNum a = oracle::random_integral(p, rng);
      if (a.is_zero()) continue;
      EXPECT_EQ(a.inverse(), oracle::inverse(a));
      EXPECT_EQ(a * a.inverse(), CycNum::from_int(p, 1));
    }
    EXPECT_EQ(itqft::h_inverse(p), oracle::inverse(itqft::h_element(p)));
  }
  EXPECT_THROW(CycNum(5).inverse(), itqft::DivisionByZero);
}

TEST(Cyclotomic, GaloisMatchesOracle) {
  std::mt19937_64 rng(13);
  const CycNum a = oracle::random_integral(7, rng);
  for (long k = 1; k < 7; ++k) EXPECT_EQ(a.galois(k), oracle::sigma(a, k));
}

TEST(Cyclotomic, ExactDivision) {
  for (int p : kPrimes) {
    const CycNum one = CycNum::from_int(p, 1);
    const CycNum z = itqft::zeta_pow(p, 1), z2 = itqft::zeta_pow(p, 2);
    const auto q = itqft::exact_div(one - z2, one - z);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, one + z);

    const auto r = itqft::exact_div(one - z, one - z2);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(*r, oracle::inverse(one + z));
    EXPECT_TRUE(r->is_integral());
    EXPECT_THROW(itqft::exact_div(one, CycNum(p)), itqft::DivisionByZero);
  }
  EXPECT_FALSE(itqft::exact_div(CycNum::from_int(5, 2), itqft::h_element(5)).has_value());
  EXPECT_EQ(oracle::valuation(CycNum::from_int(5, 2)), 0);
}

TEST(Cyclotomic, Valuation) {
  for (int p : kPrimes) {
    EXPECT_EQ(itqft::h_valuation(CycNum(p)), itqft::kInfiniteValuation);
    EXPECT_EQ(itqft::h_valuation(itqft::h_element(p)), 1);
    EXPECT_EQ(itqft::h_valuation(CycNum::from_int(p, p)), p - 1);
    EXPECT_EQ(oracle::valuation(CycNum::from_int(p, p)), p - 1);
  }
  EXPECT_EQ(itqft::h_valuation(CycNum::from_int(5, 25)), 8);
}

TEST(Cyclotomic, ValuationMatchesNormOracle) {
  std::mt19937_64 rng(14);
  for (int p : {5, 7, 11}) {
    const CycNum h = itqft::h_element(p);
    for (int k = 0; k < 15; ++k) {
      CycNum a = oracle::random_integral(p, rng) * h.pow(static_cast<unsigned long>(k % 5));
      EXPECT_EQ(itqft::h_valuation(a), oracle::valuation(a));
    }
  }
}

TEST(Cyclotomic, ValuationIsAdditive) {
  std::mt19937_64 rng(15);
  for (int p : kPrimes)
    for (int k = 0; k < 20; ++k) {
      const CycNum a = oracle::random_integral(p, rng), b = oracle::random_integral(p, rng);
      if (a.is_zero() || b.is_zero()) continue;
      EXPECT_EQ(itqft::h_valuation(a * b), itqft::h_valuation(a) + itqft::h_valuation(b));
      EXPECT_GE(itqft::h_valuation(a + b), std::min(itqft::h_valuation(a), itqft::h_valuation(b)));
    }
}

TEST(Cyclotomic, Associates) {
  for (int p : kPrimes) {
    const CycNum h = itqft::h_element(p);
    EXPECT_FALSE(itqft::is_associate(h, h * h));
    EXPECT_TRUE(itqft::is_associate(h, h * itqft::zeta_pow(p, 3)));
    EXPECT_TRUE(itqft::is_associate(CycNum(p), CycNum(p)));
  }
}

TEST(Cyclotomic, ReduceModH) {
  for (int p : kPrimes) {
    EXPECT_EQ(itqft::reduce_mod_h(itqft::zeta_pow(p, 1)), 1);
    EXPECT_EQ(itqft::reduce_mod_h(itqft::h_element(p)), 0);
    EXPECT_EQ(itqft::reduce_mod_h(itqft::zeta_pow(p, 1) + itqft::zeta_pow(p, -1)), 2);
    EXPECT_EQ(itqft::reduce_mod_h(CycNum::from_int(p, -1)), p - 1);
  }
}

TEST(HAdic, ZetaAtFive) {
  const auto t = itqft::truncate(itqft::zeta_pow(5, 1), 2);
  EXPECT_EQ(t.digits, (std::vector<int>{1, 4, 0}));
  EXPECT_EQ(oracle::digits(itqft::zeta_pow(5, 1), 2), (std::vector<int>{1, 4, 0}));
}

TEST(HAdic, ZeroAndIdeal) {
  for (int p : kPrimes)
    for (int N = 0; N < 5; ++N) {
      EXPECT_TRUE(itqft::truncate(CycNum(p), N).is_zero());
      EXPECT_TRUE(itqft::truncate(itqft::h_element(p).pow(static_cast<unsigned long>(N + 1)), N).is_zero());
    }
}

TEST(HAdic, DigitsMatchOracle) {
  std::mt19937_64 rng(16);
  for (int p : {5, 7}) {
    for (int k = 0; k < 10; ++k) {
      const CycNum a = oracle::random_integral(p, rng);
      EXPECT_EQ(itqft::truncate(a, 4).digits, oracle::digits(a, 4));
    }
  }
}

TEST(HAdic, LiftIsSection) {
  std::mt19937_64 rng(17);
  for (int p : kPrimes) {
    const CycNum a = oracle::random_integral(p, rng);
    const auto t = itqft::truncate(a, 6);
    EXPECT_EQ(itqft::truncate(itqft::lift(t), 6), t);
    EXPECT_GE(itqft::h_valuation(a - itqft::lift(t)), 7);
  }
}

TEST(HAdic, RingHomomorphism) {
  std::mt19937_64 rng(18);
  std::uniform_int_distribution<int> depth(0, 8);
  for (int p : kPrimes)
    for (int k = 0; k < 50; ++k) {
      const CycNum a = oracle::random_integral(p, rng), b = oracle::random_integral(p, rng);
      const int N = depth(rng);
      EXPECT_EQ(itqft::truncate(a + b, N), itqft::truncate(a, N) + itqft::truncate(b, N));
      EXPECT_EQ(itqft::truncate(a * b, N), itqft::truncate(a, N) * itqft::truncate(b, N));
    }
}

TEST(HAdic, DigitsOfP) {
  for (int p : kPrimes) {
    const auto t = itqft::truncate(CycNum::from_int(p, p), p + 1);
    for (int i = 0; i < p - 1; ++i) EXPECT_EQ(t.digits[static_cast<std::size_t>(i)], 0) << "p=" << p << " i=" << i;
    EXPECT_NE(t.digits[static_cast<std::size_t>(p - 1)], 0);
  }
}

TEST(HAdic, RejectsNonIntegral) {
  const CycNum half = CycNum::from_coeffs(5, {1, 0, 0, 0}, 2);
  EXPECT_THROW(itqft::truncate(half, 2), std::exception);
  EXPECT_THROW(itqft::h_valuation(half), std::exception);
}
