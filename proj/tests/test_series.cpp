#include <gtest/gtest.h>

#include "hurwitz_lab/series.hpp"
#include "support/oracles.hpp"

namespace hurwitz_lab {
namespace {

TEST(FgCoefficients, Examples) {
  auto f0 = fg_coefficients(0, 3);
  EXPECT_EQ(f0.term(1), Rational(1));
  EXPECT_EQ(f0.term(2), Rational(2));
  for (int g = 1; g <= 3; ++g) EXPECT_EQ(fg_coefficients(g, 1).term(1), Rational(0));
  EXPECT_THROW(fg_coefficients(0, 7), GuardError);
}

TEST(SgCoefficients, Examples) {
  auto s0 = sg_coefficients(0, 3);
  EXPECT_EQ(s0.term(1), Rational(1));
  EXPECT_EQ(s0.term(2), Rational(1, 2));
  const BigInt loops = oracle::hurwitz_by_enumeration(0, {1, 1, 1}, {1, 1, 1}, WalkMode::monotone);
  EXPECT_EQ(s0.term(3), Rational(loops, 6));
  EXPECT_EQ(sg_coefficients(1, 4).term(1), Rational(0));
}

TEST(Series, ExactAgainstEnumerationAndOrdered) {
  for (int g = 0; g <= 1; ++g) {
    auto f = fg_coefficients(g, 4);
    auto s = sg_coefficients(g, 4);
    for (int d = 1; d <= 4; ++d) {
      BigInt total = 0;
      for (const auto& a : partitions_of(d))
        for (const auto& b : partitions_of(d))
          total += oracle::hurwitz_by_enumeration(g, a.parts(), b.parts(), WalkMode::monotone);
      EXPECT_EQ(f.term(d), Rational(total, factorial(d)));
      EXPECT_EQ(s.term(d), Rational(oracle::hurwitz_by_enumeration(g, std::vector<int>(d, 1),
                                                                   std::vector<int>(d, 1),
                                                                   WalkMode::monotone),
                                    factorial(d)));
      EXPECT_GE(s.term(d), 0);
      EXPECT_LE(s.term(d), f.term(d));
    }
  }
}

Rational pochhammer(Rational a, int k) {
  Rational out = 1;
  for (int i = 0; i < k; ++i) out *= a + i;
  return out;
}

TEST(Hypergeometric, TermsMatchPochhammerProducts) {
  auto h = hypergeometric_coefficients(30);
  EXPECT_EQ(h.first_index, 0);
  EXPECT_EQ(h.term(0), Rational(1));
  EXPECT_EQ(h.term(1), Rational(8));
  for (int k = 0; k <= 30; ++k) {
    Rational direct = pochhammer(Rational(2, 3), k) * pochhammer(Rational(4, 3), k) /
                      (pochhammer(Rational(3, 2), k) * Rational(factorial(k))) *
                      power(Rational(27, 2), k);
    ASSERT_EQ(h.term(k), direct) << k;
  }
}

TEST(Hypergeometric, RatioIncreasesTowardsLimitFromBelow) {
  auto h = hypergeometric_coefficients(200);
  const Rational limit(27, 2);
  Rational previous = 0;
  for (int k = 0; k < 200; ++k) {
    Rational ratio = h.term(k + 1) / h.term(k);
    ASSERT_LT(ratio, limit);
    if (k >= 2) ASSERT_GT(ratio, previous);
    previous = ratio;
  }
  Rational at50 = h.term(51) / h.term(50);
  EXPECT_LT(std::abs(to_double(at50 / limit) - 1), 0.05);
}

TEST(RadiusDiagnostics, GeometricSeries) {
  CoefficientSeries geo{"geo", 1, {}};
  for (int d = 1; d <= 8; ++d) geo.terms.push_back(power(Rational(5), d));
  auto diag = radius_diagnostics(geo);
  ASSERT_EQ(diag.ratios.size(), 7u);
  for (const auto& entry : diag.ratios) EXPECT_EQ(entry.ratio, Rational(1, 5));
  for (const auto& entry : diag.root_estimates) EXPECT_NEAR(entry.estimate, 0.2, 1e-12);
  ASSERT_TRUE(diag.window_extrapolation);
  EXPECT_NEAR(*diag.window_extrapolation, 0.2, 1e-12);
}

TEST(RadiusDiagnostics, NeedsThreeConsecutiveNonzeroTerms) {
  CoefficientSeries sparse{"sparse", 1, {Rational(1), Rational(0), Rational(1), Rational(1)}};
  EXPECT_THROW(radius_diagnostics(sparse), std::invalid_argument);
  sparse.terms.push_back(Rational(1));
  auto diag = radius_diagnostics(sparse);
  EXPECT_EQ(diag.ratios.size(), 2u);
  EXPECT_EQ(diag.root_estimates.size(), 4u);
}

TEST(RadiusDiagnostics, HypergeometricNearTwoOverTwentySeven) {
  auto diag = radius_diagnostics(hypergeometric_coefficients(50));
  const double last = to_double(diag.ratios.back().ratio);
  EXPECT_LT(std::abs(last / (2.0 / 27.0) - 1), 0.05);
}

TEST(RadiusDiagnostics, FixedGenusZeroReportsRatios) {
  auto diag = radius_diagnostics(fg_coefficients(0, 5));
  EXPECT_EQ(diag.ratios.size(), 4u);
  EXPECT_EQ(diag.ratios.front().ratio, Rational(1, 2));
}

TEST(InequalityReport, Examples) {
  auto rows = inequality_report(0, 2);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].lower, 1);
  EXPECT_EQ(rows[0].total, 1);
  EXPECT_EQ(rows[0].upper, 1);
  EXPECT_EQ(rows[1].lower, 3);
  EXPECT_EQ(rows[1].total, 4);
  EXPECT_EQ(rows[1].upper, 4);
  EXPECT_EQ(rows[1].bound, 16);
  EXPECT_TRUE(rows[1].two_sided_ok);
  EXPECT_TRUE(rows[1].bound_ok);
}

TEST(InequalityReport, AllPassUpToGenusTwoDegreeFive) {
  for (int g = 0; g <= 2; ++g)
    for (const auto& row : inequality_report(g, 5)) {
      EXPECT_TRUE(row.two_sided_ok) << g << " " << row.degree;
      EXPECT_TRUE(row.bound_ok) << g << " " << row.degree;
    }
}

}  // namespace
}  // namespace hurwitz_lab
