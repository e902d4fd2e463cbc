#include "sortlab/metrics.hpp"

#include <utility>
#include <vector>

namespace sortlab {

Count count_inversions(std::span<const Key> a) {
  Count total = 0;
  for (std::size_t p = 0; p < a.size(); ++p)
    for (std::size_t q = p + 1; q < a.size(); ++q)
      if (a[p] > a[q]) ++total;
  return total;
}

namespace {

Count merge_count(std::span<Key> a, std::span<Key> scratch) {
  const std::size_t n = a.size();
  if (n < 2) return 0;
  const std::size_t mid = n / 2;
  Count total = merge_count(a.first(mid), scratch.first(mid)) +
                merge_count(a.subspan(mid), scratch.subspan(mid));

  std::size_t left = 0, right = mid, out = 0;
  while (left < mid && right < n) {
    // Ties take the left element first, so equal keys add nothing.
    if (a[right] < a[left]) {
      total += mid - left;
      scratch[out++] = a[right++];
    } else {
      scratch[out++] = a[left++];
    }
  }
  while (left < mid) scratch[out++] = a[left++];
  while (right < n) scratch[out++] = a[right++];
  std::copy(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(n), a.begin());
  return total;
}

}  // namespace

Count count_inversions_merge(std::span<const Key> a) {
  std::vector<Key> work(a.begin(), a.end());
  std::vector<Key> scratch(a.size());
  return merge_count(work, scratch);
}

InversionSnapshot inversion_snapshot(std::span<const Key> a) {
  return InversionSnapshot{count_inversions(a), max_inversions(a.size())};
}

void annotate_inversions(ArrayState input, std::span<TraceEvent> events) {
  InversionSnapshot current = inversion_snapshot(input);
  for (TraceEvent& ev : events) {
    if (ev.kind == EventKind::swap && ev.i >= 1 && ev.j >= 1 && ev.i <= input.size() &&
        ev.j <= input.size()) {
      std::swap(input[ev.i - 1], input[ev.j - 1]);
      current = inversion_snapshot(input);
    }
    ev.inversions = current;
  }
}

}  // namespace sortlab
