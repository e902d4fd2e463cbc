#pragma once

// Test-only reference: each algorithm transcribed literally from its
// pseudocode with 1-based arrays and explicit counters. Shares no code with
// the library engines; tests compare the two.

#include <cstdint>
#include <vector>

namespace sortlab::testing {

struct SimResult {
  std::vector<long long> output;
  std::uint64_t comparisons = 0;
  std::uint64_t swaps = 0;
};

enum class SimAlgo { icbics, exchange, improved, desc_ineq, desc_loops, std_insertion };

inline SimResult simulate(SimAlgo algo, const std::vector<long long>& in) {
  const long long n = static_cast<long long>(in.size());
  std::vector<long long> A(in.size() + 1);  // A[0] unused
  for (long long p = 1; p <= n; ++p) A[p] = in[p - 1];
  SimResult r;
  auto swap_at = [&](long long x, long long y) {
    long long t = A[x];
    A[x] = A[y];
    A[y] = t;
    ++r.swaps;
  };

  switch (algo) {
    case SimAlgo::icbics:
      for (long long i = 1; i <= n; ++i)
        for (long long j = 1; j <= n; ++j) {
          ++r.comparisons;
          if (A[i] < A[j]) swap_at(i, j);
        }
      break;
    case SimAlgo::exchange:
      for (long long i = 1; i <= n; ++i)
        for (long long j = i + 1; j <= n; ++j) {
          ++r.comparisons;
          if (A[i] > A[j]) swap_at(i, j);
        }
      break;
    case SimAlgo::improved:
      for (long long i = 2; i <= n; ++i)
        for (long long j = 1; j <= i - 1; ++j) {
          ++r.comparisons;
          if (A[i] < A[j]) swap_at(i, j);
        }
      break;
    case SimAlgo::desc_ineq:
      for (long long i = 1; i <= n; ++i)
        for (long long j = 1; j <= n; ++j) {
          ++r.comparisons;
          if (A[i] > A[j]) swap_at(i, j);
        }
      break;
    case SimAlgo::desc_loops:
      for (long long j = 1; j <= n; ++j)
        for (long long i = 1; i <= n; ++i) {
          ++r.comparisons;
          if (A[i] < A[j]) swap_at(i, j);
        }
      break;
    case SimAlgo::std_insertion:
      // Adjacent-exchange insertion: compare with the left neighbour, swap
      // while strictly smaller.
      for (long long i = 2; i <= n; ++i)
        for (long long k = i; k >= 2; --k) {
          ++r.comparisons;
          if (!(A[k] < A[k - 1])) break;
          swap_at(k, k - 1);
        }
      break;
  }
  r.output.assign(A.begin() + 1, A.end());
  return r;
}

// Direct enumeration of all pairs (p, q), p < q.
inline std::uint64_t brute_inversions(const std::vector<long long>& a) {
  std::uint64_t count = 0;
  for (std::size_t q = 0; q < a.size(); ++q)
    for (std::size_t p = 0; p < q; ++p) count += a[p] > a[q] ? 1 : 0;
  return count;
}

}  // namespace sortlab::testing
