#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "pseudocode_sim.hpp"
#include "sortlab/metrics.hpp"
#include "sortlab/oracle.hpp"
#include "sortlab/sortcore.hpp"

namespace sortlab {
namespace {

ArrayState random_array(std::mt19937_64& rng, std::size_t n, Key spread) {
  std::uniform_int_distribution<Key> pick(-spread, spread);
  ArrayState a(n);
  for (Key& k : a) k = pick(rng);
  return a;
}

TEST(CountInversions, Examples) {
  EXPECT_EQ(count_inversions(ArrayState{1, 2, 3}), 0u);
  EXPECT_EQ(count_inversions(ArrayState{3, 2, 1}), 3u);
  EXPECT_EQ(count_inversions(ArrayState{2, 3, 1}), 2u);
  EXPECT_EQ(count_inversions(ArrayState{}), 0u);
  EXPECT_EQ(count_inversions(ArrayState{5, 5, 5}), 0u);
  EXPECT_EQ(count_inversions(ArrayState{2, 1, 2, 1}), 3u);
}

TEST(MaxInversions, Examples) {
  EXPECT_EQ(max_inversions(0), 0u);
  EXPECT_EQ(max_inversions(1), 0u);
  EXPECT_EQ(max_inversions(3), 3u);
  EXPECT_EQ(max_inversions(8), 28u);
}

TEST(SwapBounds, Examples) {
  EXPECT_EQ(swap_bounds(3, 0), (SwapBounds{4, 4, 2}));
  EXPECT_EQ(swap_bounds(1, 0), (SwapBounds{1, 0, 0}));
  EXPECT_EQ(swap_bounds(8, 10), (SwapBounds{29, 24, 7}));
  EXPECT_EQ(swap_bounds(0, 0), (SwapBounds{1, 0, 0}));
  EXPECT_EQ(swap_bounds(8, 10).upper(), 24u);
}

TEST(SwapBounds, Theorem2UpperMatchesExhaustiveMaximumAtEight) {
  EXPECT_EQ(exhaustive_summary(8).max_swaps, swap_bounds(8, 10).theorem2_upper);
}

TEST(CountInversions, AgreesWithBruteForceAndMergeCounter) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> length(0, 256);
  for (int trial = 0; trial < 1000; ++trial) {
    const ArrayState a = random_array(rng, length(rng), trial % 3 == 0 ? 4 : 1000);
    const Count scan = count_inversions(a);
    ASSERT_EQ(scan, testing::brute_inversions({a.begin(), a.end()}));
    ASSERT_EQ(scan, count_inversions_merge(a));
  }
}

TEST(CountInversions, BoundedByMaxWithEqualityOnlyWhenStrictlyDecreasing) {
  for (std::size_t n = 0; n <= 7; ++n) {
    for (const ArrayState& perm : enumerate_permutations(n)) {
      const Count inv = count_inversions(perm);
      ASSERT_LE(inv, max_inversions(n));
      const bool decreasing = std::ranges::is_sorted(perm, std::ranges::greater{}) &&
                              std::ranges::adjacent_find(perm) == perm.end();
      ASSERT_EQ(inv == max_inversions(n), decreasing);
      ASSERT_EQ(inv == 0, std::ranges::is_sorted(perm));
    }
  }
}

TEST(CountInversions, AppendingNewMaximumAddsNothing) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    ArrayState a = random_array(rng, 30, 50);
    const Count before = count_inversions(a);
    a.push_back(1000);
    ASSERT_EQ(count_inversions(a), before);
  }
}

TEST(CountInversions, RotatingMaximumToFrontAddsItsDistance) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    ArrayState a = random_permutation(40, rng);
    const auto top = std::ranges::max_element(a);
    const auto distance = static_cast<Count>(top - a.begin());
    const Count before = count_inversions(a);
    std::rotate(a.begin(), top, top + 1);
    ASSERT_EQ(count_inversions(a), before + distance);
  }
}

TEST(InversionSnapshot, AnnotateFollowsSwaps) {
  const ArrayState input{2, 3, 1};
  TraceRecorder recorder;
  icbics_sort(input, recorder.as_sink());
  std::vector<TraceEvent> events = recorder.events();
  annotate_inversions(input, events);

  ArrayState state = input;
  for (const TraceEvent& ev : events) {
    if (ev.kind == EventKind::swap) std::swap(state[ev.i - 1], state[ev.j - 1]);
    ASSERT_TRUE(ev.inversions.has_value());
    EXPECT_EQ(*ev.inversions, inversion_snapshot(state));
    EXPECT_EQ(ev.inversions->max_inversions, 3u);
  }
  EXPECT_EQ(events.back().inversions->inversions, 0u);
}

}  // namespace
}  // namespace sortlab
