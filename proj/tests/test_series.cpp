#include "kpaths/formulas.hpp"
#include "kpaths/lattice.hpp"
#include "kpaths/series.hpp"

#include <gtest/gtest.h>

using namespace kpaths;

namespace {

WeightVector unit_t1(unsigned M) {
  std::vector<BigRat> w(M, BigRat(0));
  w[0] = 1;
  return WeightVector(w);
}

}  // namespace

TEST(Truncated, Arithmetic) {
  const auto one = TruncatedSeries::constant(BigRat(1), 2, 2);
  const auto x = TruncatedSeries::x(2, 2);
  const auto z = TruncatedSeries::z(2, 2);
  const TruncatedSeries prod = (one + x) * (one - x);
  EXPECT_EQ(prod.coeff(0, 0), BigRat(1));
  EXPECT_EQ(prod.coeff(1, 0), BigRat(0));
  EXPECT_EQ(prod.coeff(2, 0), BigRat(-1));
  const TruncatedSeries d = (x * x * z).derivative_x();
  EXPECT_EQ(d.coeff(1, 1), BigRat(2));
  EXPECT_TRUE((d - BigRat(2) * x * z).is_zero());
  const TruncatedSeries c = (one + x).pow(3);
  EXPECT_EQ(c.coeff(1, 0), BigRat(3));
  EXPECT_EQ(c.coeff(2, 0), BigRat(3));
}

TEST(Truncated, Reciprocal) {
  const auto one = TruncatedSeries::constant(BigRat(1), 6, 4);
  const auto x = TruncatedSeries::x(6, 4);
  const auto z = TruncatedSeries::z(6, 4);
  const TruncatedSeries f = one + BigRat(3) * x - z * x + BigRat(2) * z;
  EXPECT_TRUE((f * f.reciprocal() - one).is_zero());
}

TEST(SolveY, SpecExamples) {
  EXPECT_EQ(solve_y(unit_t1(4), 4, 2).coeff(1, 0), BigRat(1));
  EXPECT_EQ(solve_y(unit_t1(4), 4, 2).coeff(2, 0), BigRat(1));
  // y = x P: the Dyck count C_3 sits at x^4.
  EXPECT_EQ(solve_y(WeightVector::ones(6), 4, 2).coeff(3, 0), BigRat(2));
  EXPECT_EQ(solve_y(WeightVector::ones(6), 4, 2).coeff(4, 0), BigRat(5));
}

TEST(GfFamily, CoefficientsMatchEnumeration) {
  const WeightVector t = WeightVector::ones(8);
  const TruncatedSeries Q = gf_family(GfFamily::Q, t, 5, 3);
  const TruncatedSeries P = gf_family(GfFamily::P, t, 5, 3);
  EXPECT_EQ(Q.coeff(1, 1), BigRat(1));
  EXPECT_EQ(P.coeff(1, 1), BigRat(3));
  for (unsigned m = 0; m <= 4; ++m) {
    for (unsigned j = 0; j <= 3; ++j) {
      EXPECT_EQ(count_from_p(P, m, j), BigRat(count_family(PathFamily::p(1, m, j))));
      EXPECT_EQ(Q.coeff(m, j), BigRat(count_family(PathFamily::q(1, m, j))));
    }
  }
}

TEST(GfFamily, InternalStatisticsOverQ) {
  // H carries the off-axis statistic; QInternal carries beta.
  const WeightVector t(std::vector<BigRat>{make_rat(2, 3), make_rat(5, 7), make_rat(1, 4), BigRat(3), BigRat(1), BigRat(1)});
  const TruncatedSeries H = gf_family(GfFamily::H, t, 4, 3);
  const TruncatedSeries QI = gf_family(GfFamily::QInternal, t, 4, 3);
  for (unsigned m = 0; m <= 4; ++m) {
    for (unsigned j = 0; j <= 3; ++j) {
      BigRat off(0);
      BigRat beta(0);
      enumerate_paths(PathFamily::q(1, m, j), [&](const LatticePath& p) {
        off += off_axis_u_segment_profile(p).weight(t);
        beta += internal_u_segment_profile(p).weight(t);
      });
      EXPECT_EQ(H.coeff(m, j), off) << m << "," << j;
      EXPECT_EQ(QI.coeff(m, j), beta) << m << "," << j;
    }
  }
}

TEST(Lagrange, SpecExamples) {
  const unsigned N = 6;
  const UniSeries x = UniSeries::x(N);
  const UniSeries one = UniSeries::constant(BigRat(1), N);
  const UniSeries f = x * (one + x).pow(2).reciprocal();
  EXPECT_EQ(lagrange_coeff(x, f, 3), BigRat(5));
  EXPECT_EQ(lagrange_coeff(x, x, 1), BigRat(1));
  EXPECT_EQ(lagrange_coeff(x, x, 2), BigRat(0));
  EXPECT_EQ(lagrange_coeff(x * x, f, 1), BigRat(0));
}

TEST(Lagrange, AgreesWithReversion) {
  const unsigned N = 8;
  const UniSeries x = UniSeries::x(N);
  const UniSeries f = x - x * x + BigRat(3) * x.pow(3);
  const UniSeries g = f.reversion();
  EXPECT_EQ(f.compose(g).truncated(N - 1).coeffs(), x.truncated(N - 1).coeffs());
  for (unsigned n = 1; n < N; ++n) EXPECT_EQ(lagrange_coeff(x, f, n), g[n]);
}

TEST(Pary, TreeCoefficients) {
  EXPECT_EQ(pary_tree_gf(2, 5)[4], BigRat(14));
  EXPECT_EQ(pary_tree_gf(3, 4)[2], BigRat(3));
  for (unsigned p = 1; p <= 4; ++p) EXPECT_EQ(pary_tree_gf(p, 3)[0], BigRat(1));
  for (unsigned n = 0; n <= 6; ++n) {
    EXPECT_EQ(pary_tree_gf(3, 7)[n], make_rat(binomial(3L * n, n), BigInt(2 * n + 1)));
  }
}

TEST(RationalPower, MatchesIntegerPower) {
  const UniSeries x = UniSeries::x(7);
  const UniSeries f = UniSeries::constant(BigRat(1), 7) + BigRat(2) * x - x * x;
  for (unsigned e = 0; e <= 4; ++e) EXPECT_EQ(rational_power(f, BigRat(e)).coeffs(), f.pow(e).coeffs());
  const UniSeries h = rational_power(f, make_rat(1, 2));
  EXPECT_EQ((h * h).coeffs(), f.coeffs());
}

TEST(SegmentGfs, KnownSequences) {
  const UniSeries bar = gf_tilde_bar(SegmentGf::bar, 2, 0, 6);
  const long catalan[] = {1, 1, 2, 5, 14, 42};
  for (unsigned n = 0; n < 6; ++n) EXPECT_EQ(bar[n], BigRat(catalan[n]));
  const long motz[] = {1, 1, 2, 4, 9, 21};
  const UniSeries b1 = gf_tilde_bar(SegmentGf::bar, 1, 0, 6);
  const UniSeries t1 = gf_tilde_bar(SegmentGf::tilde, 1, 0, 6);
  for (unsigned n = 0; n < 6; ++n) {
    EXPECT_EQ(b1[n], BigRat(motz[n]));
    EXPECT_EQ(t1[n], BigRat(motz[n]));
  }
}

TEST(SegmentGfs, SubstitutionIdentities) {
  for (unsigned k = 1; k <= 3; ++k) {
    for (unsigned ell = 0; ell < k; ++ell) {
      for (const SegmentGf w : {SegmentGf::tilde, SegmentGf::bar}) {
        const auto [lhs, rhs] = substitution_identity(w, k, ell, 10);
        EXPECT_EQ(lhs.coeffs(), rhs.coeffs()) << k << "," << ell;
      }
    }
  }
}
