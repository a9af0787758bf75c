#include "kpaths/exact.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace kpaths;

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(4, 0), 1);
  EXPECT_EQ(binomial(3, -1), 0);
  EXPECT_EQ(binomial(3, 4), 0);
  EXPECT_EQ(binomial(60, 30), BigInt("118264581564861424"));
}

TEST(Binomial, PascalRecurrence) {
  for (long n = 1; n <= 40; ++n) {
    for (long k = 0; k <= n; ++k) EXPECT_EQ(binomial(n, k), BigInt(binomial(n - 1, k) + binomial(n - 1, k - 1)));
  }
}

TEST(BinomialGen, Values) {
  EXPECT_EQ(binomial_gen(make_rat(3, 2), 2), make_rat(3, 8));
  EXPECT_EQ(binomial_gen(make_rat(7, 3), 0), BigRat(1));
  EXPECT_EQ(binomial_gen(BigRat(5), 2), BigRat(10));
  EXPECT_EQ(binomial_gen(BigRat(-1), 3), BigRat(-1));
}

TEST(Multinomial, Values) {
  const unsigned a[] = {1, 1};
  const unsigned b[] = {3};
  const unsigned c[] = {2, 2};
  EXPECT_EQ(multinomial(2, a), 2);
  EXPECT_EQ(multinomial(3, b), 1);
  EXPECT_EQ(multinomial(4, c), 6);
}

TEST(Stirling, SecondKind) {
  EXPECT_EQ(stirling2(4, 2), 7);
  EXPECT_EQ(stirling2(3, 2), 3);
  for (unsigned n = 0; n <= 10; ++n) EXPECT_EQ(stirling2(n, n), 1);
  EXPECT_EQ(stirling2(5, 0), 0);
}

TEST(Stirling, FirstKind) {
  EXPECT_EQ(stirling1_unsigned(4, 2), 11);
  EXPECT_EQ(stirling1_unsigned(3, 1), 2);
  for (unsigned n = 0; n <= 10; ++n) EXPECT_EQ(stirling1_unsigned(n, n), 1);
}

TEST(Stirling, RowSums) {
  for (unsigned n = 0; n <= 12; ++n) {
    BigInt s(0);
    for (unsigned k = 0; k <= n; ++k) s += stirling1_unsigned(n, k);
    EXPECT_EQ(s, factorial(n));
  }
}

TEST(Rationals, ParseAndPrint) {
  EXPECT_EQ(parse_rat("3/6"), make_rat(1, 2));
  EXPECT_EQ(parse_rat("-2"), BigRat(-2));
  EXPECT_EQ(to_string(make_rat(4, 6)), "2/3");
  EXPECT_THROW(parse_rat("1/0"), std::exception);
  EXPECT_THROW(parse_rat("abc"), std::exception);
  EXPECT_THROW(require_integer(make_rat(1, 2)), std::exception);
  EXPECT_EQ(require_integer(make_rat(6, 3)), 2);
}

TEST(Kappa, Solutions) {
  const auto s = kappa_solutions(4, 2);
  ASSERT_EQ(s.size(), 2U);
  for (const auto& k : s) {
    EXPECT_EQ(k.blocks(), 2U);
    EXPECT_EQ(k.weight(), 4U);
  }
  const auto t = kappa_solutions(3, 3);
  ASSERT_EQ(t.size(), 1U);
  EXPECT_EQ(t[0].counts[0], 3U);
  EXPECT_TRUE(kappa_solutions(2, 0).empty());
}

TEST(Kappa, CountsArePartitionNumbers) {
  // Summed over r, kappa solutions are the partitions of m.
  const unsigned partitions[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (unsigned m = 1; m <= 10; ++m) {
    std::size_t total = 0;
    for (unsigned r = 1; r <= m; ++r) total += kappa_solutions(m, r).size();
    EXPECT_EQ(total, partitions[m]);
  }
}

TEST(Bell, Specializations) {
  const std::vector<BigRat> ones(3, BigRat(1));
  const std::vector<BigRat> idem{BigRat(1), BigRat(2), BigRat(3)};
  EXPECT_EQ(bell_partial(3, 2, ones), BigRat(3));
  EXPECT_EQ(bell_partial(3, 2, idem), BigRat(6));
  EXPECT_EQ(bell_partial(3, 0, ones), BigRat(0));
  EXPECT_EQ(bell_partial(0, 0, ones), BigRat(1));
}

TEST(Bell, StirlingPanels) {
  for (unsigned m = 1; m <= 10; ++m) {
    std::vector<BigRat> ones(m, BigRat(1));
    std::vector<BigRat> fact(m);
    for (unsigned i = 0; i < m; ++i) fact[i] = BigRat(factorial(i));
    for (unsigned r = 1; r <= m; ++r) {
      EXPECT_EQ(bell_partial(m, r, ones), BigRat(stirling2(m, r)));
      EXPECT_EQ(bell_partial(m, r, fact), BigRat(stirling1_unsigned(m, r)));
    }
  }
}

TEST(Bell, HomogeneityProperty) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const unsigned m = 1 + rng() % 7;
    std::vector<BigRat> x(m);
    for (auto& v : x) v = make_rat(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 6));
    const BigRat a = make_rat(1 + static_cast<long>(rng() % 5), 1 + static_cast<long>(rng() % 5));
    const BigRat b = make_rat(1 + static_cast<long>(rng() % 5), 1 + static_cast<long>(rng() % 5));
    std::vector<BigRat> scaled(m);
    BigRat bp(1);
    for (unsigned i = 0; i < m; ++i) {
      bp *= b;
      scaled[i] = a * bp * x[i];
    }
    for (unsigned r = 1; r <= m; ++r) {
      EXPECT_EQ(bell_partial(m, r, scaled), BigRat(pow(a, r) * pow(b, m) * bell_partial(m, r, x)));
    }
  }
}

TEST(Potential, Values) {
  const std::vector<BigRat> f{BigRat(1), BigRat(2)};
  EXPECT_EQ(potential_poly(2, BigRat(3), f), BigRat(12));
  EXPECT_EQ(potential_poly(0, make_rat(5, 7), f), BigRat(1));
  EXPECT_EQ(potential_poly(1, make_rat(5, 7), f), make_rat(5, 7));
}

TEST(WeightVector, Basics) {
  const WeightVector w = WeightVector::ones(3);
  EXPECT_EQ(w.size(), 3U);
  EXPECT_EQ(w[0], BigRat(1));
  EXPECT_EQ(w[3], BigRat(1));
  EXPECT_THROW(w.require(5), std::exception);
  const auto fs = w.factorial_scaled(3);
  EXPECT_EQ(fs[2], BigRat(6));
}

TEST(WeightPowerCoeff, MatchesExpansion) {
  // (1 + x + x^2)^3 = 1 + 3x + 6x^2 + ...
  const WeightVector t(std::vector<BigRat>{BigRat(1), BigRat(1)});
  EXPECT_EQ(weight_power_coeff(t, BigRat(3), 1), BigRat(3));
  EXPECT_EQ(weight_power_coeff(t, BigRat(3), 2), BigRat(6));
  EXPECT_EQ(weight_power_coeff(t, BigRat(3), 0), BigRat(1));
}
