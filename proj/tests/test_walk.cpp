#include <gtest/gtest.h>

#include "hurwitz_lab/counter.hpp"
#include "hurwitz_lab/walk.hpp"
#include "support/oracles.hpp"

namespace hurwitz_lab {
namespace {

const Permutation kThreeCycle({2, 3, 1});  // 1 -> 2 -> 3 -> 1

TEST(EndPoint, Examples) {
  Walk empty(kThreeCycle, {});
  EXPECT_EQ(end_point(empty), kThreeCycle);
  EXPECT_TRUE(end_point(Walk(Permutation::identity(2), {{1, 2}, {1, 2}})).is_identity());
  EXPECT_EQ(end_point(Walk(Permutation::identity(3), {{1, 2}, {1, 3}})), kThreeCycle);
}

TEST(Walk, RejectsStepsOutsideDegree) {
  EXPECT_THROW(Walk(Permutation::identity(2), {{1, 3}}), std::invalid_argument);
}

TEST(Spectrum, ModesAdmit) {
  EXPECT_TRUE(admits(WalkMode::monotone, {2, 2, 3}));
  EXPECT_FALSE(admits(WalkMode::strict, {2, 2, 3}));
  EXPECT_FALSE(admits(WalkMode::monotone, {3, 2}));
  EXPECT_TRUE(admits(WalkMode::any, {3, 2}));
  EXPECT_TRUE(admits(WalkMode::strict, {}));
}

TEST(EnumerateWalks, Examples) {
  auto loops = enumerate_walks(Permutation::identity(2), Permutation::identity(2), 2,
                               WalkMode::monotone, true);
  ASSERT_EQ(loops.size(), 1u);
  EXPECT_EQ(loops[0].steps, (std::vector<Transposition>{{1, 2}, {1, 2}}));

  auto to_cycle = enumerate_walks(Permutation::identity(3), kThreeCycle, 2, WalkMode::monotone, false);
  ASSERT_EQ(to_cycle.size(), 2u);
  EXPECT_EQ(to_cycle[0].steps, (std::vector<Transposition>{{1, 2}, {1, 3}}));
  EXPECT_EQ(to_cycle[1].steps, (std::vector<Transposition>{{1, 3}, {2, 3}}));

  EXPECT_TRUE(enumerate_walks(kThreeCycle, Permutation::identity(3), 0, WalkMode::any, false).empty());
  EXPECT_EQ(enumerate_walks(kThreeCycle, kThreeCycle, 0, WalkMode::any, false).size(), 1u);
}

TEST(EnumerateWalks, ParityMismatchIsEmpty) {
  EXPECT_TRUE(enumerate_walks(Permutation::identity(3), kThreeCycle, 3, WalkMode::any, false).empty());
}

TEST(EnumerateWalks, SortedAndDuplicateFree) {
  auto all = enumerate_walks_from(Permutation::identity(4), 3, WalkMode::any, false);
  EXPECT_EQ(all.size(), 216u);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  EXPECT_EQ(std::adjacent_find(all.begin(), all.end()), all.end());
}

TEST(EnumerateWalks, MatchesRawEnumeration) {
  for (int d = 1; d <= 3; ++d)
    for (const auto& rho : all_permutations(d))
      for (int r = 0; r <= 4; ++r)
        for (auto mode : {WalkMode::any, WalkMode::monotone, WalkMode::strict}) {
          auto raw = oracle::all_walks(rho.images(), r, mode);
          auto lib = enumerate_walks_from(rho, r, mode, false);
          ASSERT_EQ(raw.size(), lib.size());
          std::size_t transitive = 0;
          for (const auto& w : raw) transitive += oracle::raw_is_transitive(w);
          ASSERT_EQ(enumerate_walks_from(rho, r, mode, true).size(), transitive);
        }
}

TEST(EnumerateWalks, GuardsAreErrors) {
  EXPECT_THROW(enumerate_walks_from(Permutation::identity(5), 1, WalkMode::any, false), GuardError);
  EXPECT_THROW(enumerate_walks_from(Permutation::identity(3), 9, WalkMode::any, false), GuardError);
  Guards wide;
  wide.max_brute_degree = 5;
  EXPECT_EQ(enumerate_walks_from(Permutation::identity(5), 1, WalkMode::any, false, wide).size(), 10u);
}

}  // namespace
}  // namespace hurwitz_lab
