#include <gtest/gtest.h>

#include "hurwitz_lab/counter.hpp"
#include "hurwitz_lab/walk.hpp"
#include "support/oracles.hpp"

namespace hurwitz_lab {
namespace {

constexpr WalkMode kModes[] = {WalkMode::any, WalkMode::monotone, WalkMode::strict};

BigInt count_of(const CountTable& t) { return t.total(); }

TEST(CountWalks, Examples) {
  EXPECT_EQ(count_of(count_walks(Permutation::identity(2), CycleType({1, 1}), 2,
                                 WalkMode::monotone, true, false)), 1);
  EXPECT_EQ(count_of(count_walks(Permutation::identity(3), CycleType({3}), 2,
                                 WalkMode::monotone, true, false)), 4);
  EXPECT_EQ(count_of(count_walks(Permutation::identity(1), CycleType({1}), 0,
                                 WalkMode::monotone, true, false)), 1);
  EXPECT_EQ(count_of(count_walks(Permutation::identity(3), CycleType::trivial(3), 0,
                                 WalkMode::monotone, false, false)), 1);
  EXPECT_EQ(count_of(count_walks(Permutation::identity(3), CycleType::trivial(3), 0,
                                 WalkMode::monotone, true, false)), 0);
  EXPECT_TRUE(count_walks(Permutation::identity(3), CycleType({3}), 3, WalkMode::any, false, false).empty());
}

TEST(CountWalks, DegreeGuard) {
  EXPECT_THROW(count_walks(Permutation::identity(7), CycleType::trivial(7), 1,
                           WalkMode::any, false, false), GuardError);
}

// Exhaustive agreement with raw enumeration for small cases; the acceptance
// suite repeats this for d = 4, r <= 6.
TEST(CountWalks, MatchesRawEnumerationSmall) {
  for (int d = 1; d <= 3; ++d) {
    for (const auto& rho : all_permutations(d)) {
      for (auto mode : kModes) {
        for (int r = 0; r <= 5; ++r) {
          std::map<std::tuple<std::vector<int>, bool, int>, BigInt> raw;
          for (const auto& w : oracle::all_walks(rho.images(), r, mode))
            ++raw[{oracle::cycle_type_by_return_times(w.end), oracle::raw_is_transitive(w),
                   oracle::raw_distinct_colours(w)}];
          for (const auto& beta : partitions_of(d)) {
            for (bool transitive : {false, true}) {
              auto table = count_walks(rho, beta, r, mode, transitive, true);
              for (int c = 0; c <= d; ++c) {
                BigInt expected = raw[{beta.parts(), true, c}];
                if (!transitive) expected += raw[{beta.parts(), false, c}];
                ASSERT_EQ(table.at({-1, cycle_type(rho), beta, c}), expected);
              }
            }
          }
        }
      }
    }
  }
}

TEST(CountWalks, RefinementSumsToUnrefined) {
  for (auto mode : kModes)
    for (int r = 0; r <= 6; ++r)
      for (const auto& beta : partitions_of(4)) {
        auto coarse = count_walks(Permutation::identity(4), beta, r, mode, true, false);
        auto fine = count_walks(Permutation::identity(4), beta, r, mode, true, true);
        ASSERT_EQ(coarse.total(), fine.total());
      }
}

TEST(CountWalks, ModeOrderingAndParity) {
  const auto rho = Permutation({2, 1, 4, 3, 5});
  for (int r = 0; r <= 6; ++r) {
    for (const auto& beta : partitions_of(5)) {
      BigInt any = count_walks(rho, beta, r, WalkMode::any, false, false).total();
      BigInt mono = count_walks(rho, beta, r, WalkMode::monotone, false, false).total();
      BigInt strict = count_walks(rho, beta, r, WalkMode::strict, false, false).total();
      ASSERT_LE(strict, mono);
      ASSERT_LE(mono, any);
      const bool parity_ok = (r % 2 == 0) == (rho.sign() == beta.sign());
      if (!parity_ok) ASSERT_EQ(any, 0);
    }
  }
}

TEST(MonotoneCountByTargetType, Examples) {
  for (int r = 0; r <= 8; ++r) {
    EXPECT_EQ(monotone_count_by_target_type(2, r, CycleType({1, 1})), r % 2 == 0 ? 1 : 0);
    EXPECT_EQ(monotone_count_by_target_type(2, r, CycleType({2})), r % 2 == 1 ? 1 : 0);
  }
  for (int d = 1; d <= 5; ++d) EXPECT_EQ(monotone_count_by_target_type(d, 0, CycleType::trivial(d)), 1);
  EXPECT_EQ(monotone_count_by_target_type(3, 2, CycleType({3})), 2);
  EXPECT_THROW(monotone_count_by_target_type(3, 2, CycleType({2})), std::invalid_argument);
}

// The monotone count from rho to sigma depends only on the type of rho^-1 sigma.
TEST(MonotoneCountByTargetType, DependsOnlyOnRelativeType) {
  for (int d = 1; d <= 4; ++d) {
    for (int r = 0; r <= 5; ++r) {
      std::map<CycleType, BigInt> seen;
      for (const auto& rho : all_permutations(d)) {
        WalkCounter counter(d, {WalkMode::monotone, false, false});
        counter.seed(rho);
        counter.advance_to(r);
        const auto ends = counter.by_end_point();
        for (const auto& sigma : all_permutations(d)) {
          auto it = ends.find(sigma);
          BigInt count = it == ends.end() ? BigInt(0) : it->second;
          auto type = cycle_type(compose(rho.inverse(), sigma));
          auto [slot, fresh] = seen.try_emplace(type, count);
          if (!fresh) ASSERT_EQ(slot->second, count) << "d=" << d << " r=" << r;
        }
      }
      for (const auto& [type, count] : seen)
        ASSERT_EQ(monotone_count_by_target_type(d, r, type), count);
    }
  }
}

TEST(WalkCounter, SeedAfterStepIsAnError) {
  WalkCounter counter(3, {});
  counter.seed(Permutation::identity(3));
  counter.step();
  EXPECT_THROW(counter.seed(Permutation::identity(3)), std::logic_error);
  EXPECT_THROW(counter.advance_to(0), std::logic_error);
}

}  // namespace
}  // namespace hurwitz_lab
