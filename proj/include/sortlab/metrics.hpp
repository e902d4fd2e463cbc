#pragma once

#include <span>

#include "sortlab/types.hpp"

namespace sortlab {

// Number of pairs p < q with a[p] > a[q]. Equal keys never form an
// inversion. Quadratic pair scan; this is the reference counter.
Count count_inversions(std::span<const Key> a);

// Merge-based O(n log n) counter, checked against count_inversions.
Count count_inversions_merge(std::span<const Key> a);

constexpr Count max_inversions(std::size_t n) {
  return n < 2 ? 0 : static_cast<Count>(n) * (n - 1) / 2;
}

InversionSnapshot inversion_snapshot(std::span<const Key> a);

// Replays `events` over `input` and attaches the inversion snapshot of the
// state after each event.
void annotate_inversions(ArrayState input, std::span<TraceEvent> events);

// Closed-form swap bounds for icbics_sort on n distinct keys with I
// inversions in the input.
struct SwapBounds {
  Count theorem2_upper = 0;  // I_max + 1
  Count theorem3_upper = 0;  // I + 2(n - 1)
  Count theorem4_lower = 0;  // max(0, n - 1)

  Count upper() const { return theorem2_upper < theorem3_upper ? theorem2_upper : theorem3_upper; }

  friend bool operator==(const SwapBounds&, const SwapBounds&) = default;
};

// For n = 0 the 2(n - 1) term is taken as 0, so theorem3_upper = I.
constexpr SwapBounds swap_bounds(std::size_t n, Count inversions) {
  const Count slack = n == 0 ? 0 : 2 * static_cast<Count>(n - 1);
  return SwapBounds{
      max_inversions(n) + 1,
      inversions + slack,
      n < 2 ? 0 : static_cast<Count>(n - 1),
  };
}

}  // namespace sortlab
