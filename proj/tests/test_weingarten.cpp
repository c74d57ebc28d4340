#include <gtest/gtest.h>

#include "hurwitz_lab/weingarten.hpp"
#include "support/oracles.hpp"

namespace hurwitz_lab {
namespace {

TEST(Expansion, SmallDegrees) {
  auto one = expansion(1, CycleType({1}), 6);
  EXPECT_EQ(one.coefficients.front(), 1);
  for (int r = 1; r <= 6; ++r) EXPECT_EQ(one.coefficients[r], 0);

  auto even = expansion(2, CycleType({1, 1}), 10);
  auto odd = expansion(2, CycleType({2}), 10);
  for (int r = 0; r <= 10; ++r) {
    EXPECT_EQ(even.coefficients[r], r % 2 == 0 ? 1 : 0);
    EXPECT_EQ(odd.coefficients[r], r % 2 == 1 ? 1 : 0);
  }
  EXPECT_THROW(expansion(3, CycleType({2}), 2), std::invalid_argument);
}

TEST(Expansion, ParityVanishing) {
  for (const auto& type : partitions_of(4)) {
    auto e = expansion(4, type, 8);
    for (int r = 0; r <= 8; ++r)
      if ((r % 2 == 0) != (type.sign() == 1)) EXPECT_EQ(e.coefficients[r], 0);
  }
}

TEST(Expansion, MatchesEnumerationFromAnyConcretePair) {
  for (int d = 1; d <= 4; ++d) {
    for (const auto& type : partitions_of(d)) {
      auto e = expansion(d, type, 6);
      for (const auto& rho : all_permutations(d)) {
        for (const auto& sigma : all_permutations(d)) {
          if (cycle_type(compose(rho.inverse(), sigma)) != type) continue;
          for (int r = 0; r <= 6; ++r) {
            const auto walks = enumerate_walks(rho, sigma, r, WalkMode::monotone, false);
            ASSERT_EQ(e.coefficients[r], walks.size()) << d << " " << type.str() << " " << r;
          }
        }
        if (d == 4) break;  // one start per type is enough at d = 4
      }
    }
  }
}

TEST(Evaluate, DegreeOneIsExact) {
  auto e = expansion(1, CycleType({1}), 5);
  for (int N : {1, 2, 7, 100}) EXPECT_EQ(evaluate(e, N, 5).partial_sum, Rational(1, N));
}

TEST(Evaluate, DegreeTwoGeometricClosedForms) {
  const int N = 3, r_max = 40;
  const Rational x(1, N * N);
  auto even = evaluate(expansion(2, CycleType({1, 1}), r_max), N, r_max);
  auto odd = evaluate(expansion(2, CycleType({2}), r_max), N, r_max);

  const Rational target_even(1, N * N - 1);
  const Rational target_odd(-1, N * (N * N - 1));
  // Nonzero terms are x^(k+1) for k = 0..20 (even type) and -x^(k+1) / N (odd type).
  EXPECT_EQ(target_even - even.partial_sum, x * oracle::geometric_tail(x, 20));
  EXPECT_EQ(target_odd - odd.partial_sum, -x / N * oracle::geometric_tail(x, 19));
  EXPECT_EQ(target_even, x * oracle::geometric_sum(x));
  EXPECT_LT(std::abs(to_double(target_even - even.partial_sum)), 1e-15);
  EXPECT_LT(std::abs(to_double(target_odd - odd.partial_sum)), 1e-15);

  ASSERT_TRUE(even.tail_estimate);
  EXPECT_NEAR(*even.observed_ratio, 1.0 / 9, 1e-15);
  const double exact_tail = to_double(target_even - even.partial_sum);
  EXPECT_NEAR(*even.tail_estimate / exact_tail, 1.0, 1e-12);
}

TEST(Evaluate, RejectsSmallN) {
  auto e = expansion(3, CycleType({3}), 4);
  EXPECT_THROW(evaluate(e, 2, 4), std::domain_error);
  EXPECT_THROW(evaluate(e, 3, 5), std::invalid_argument);
  EXPECT_NO_THROW(evaluate(e, 3, 4));
}

}  // namespace
}  // namespace hurwitz_lab
