#include "sortlab/oracle.hpp"

#include <algorithm>
#include <future>
#include <numeric>

#include "sortlab/metrics.hpp"
#include "sortlab/sortcore.hpp"
#include "sortlab/verify.hpp"

namespace sortlab {

Count factorial(std::size_t n) {
  Count result = 1;
  for (std::size_t k = 2; k <= n; ++k) result *= k;
  return result;
}

Permutations::Permutations(std::size_t n) : n_(n) {
  if (n > kMaxEnumerationLength)
    throw EnumerationGuardError("permutation enumeration capped at n = " +
                                std::to_string(kMaxEnumerationLength) + ", got " +
                                std::to_string(n));
}

Permutations::iterator::iterator(std::size_t n) : current_(n), done_(false) {
  std::iota(current_.begin(), current_.end(), Key{1});
}

Permutations::iterator& Permutations::iterator::operator++() {
  done_ = !std::next_permutation(current_.begin(), current_.end());
  return *this;
}

namespace {

void keep_sorted_unique(std::vector<ArrayState>& inputs) {
  std::ranges::sort(inputs);
  const auto tail = std::ranges::unique(inputs);
  inputs.erase(tail.begin(), tail.end());
}

void require_exhaustive_range(std::size_t n) {
  if (n < 2 || n > kMaxExhaustiveLength)
    throw EnumerationGuardError("exhaustive oracle needs 2 <= n <= " +
                                std::to_string(kMaxExhaustiveLength) + ", got " +
                                std::to_string(n));
}

}  // namespace

void record_run(OracleSummary& summary, const ArrayState& input) {
  ArrayState work = input;
  const Count swaps = icbics_sort_inplace(std::span<Key>(work), NullSink{}).swaps;
  const SwapBounds bounds = swap_bounds(input.size(), count_inversions(input));

  if (swaps > bounds.theorem2_upper || swaps > bounds.theorem3_upper ||
      swaps < bounds.theorem4_lower) {
    ++summary.bound_violations;
    if (!summary.first_violation || input < *summary.first_violation)
      summary.first_violation = input;
  }

  if (summary.inputs_examined == 0 || swaps > summary.max_swaps) {
    summary.max_swaps = swaps;
    summary.argmax_inputs.clear();
  }
  if (swaps == summary.max_swaps) summary.argmax_inputs.push_back(input);

  if (summary.inputs_examined == 0 || swaps < summary.min_swaps) {
    summary.min_swaps = swaps;
    summary.argmin_inputs.clear();
  }
  if (swaps == summary.min_swaps) summary.argmin_inputs.push_back(input);

  ++summary.inputs_examined;
}

OracleSummary merge(const OracleSummary& a, const OracleSummary& b) {
  if (a.inputs_examined == 0) return b;
  if (b.inputs_examined == 0) return a;

  OracleSummary out = a;
  out.inputs_examined = a.inputs_examined + b.inputs_examined;
  out.bound_violations = a.bound_violations + b.bound_violations;
  if (b.first_violation && (!a.first_violation || *b.first_violation < *a.first_violation))
    out.first_violation = b.first_violation;

  out.max_swaps = std::max(a.max_swaps, b.max_swaps);
  out.argmax_inputs.clear();
  for (const OracleSummary* part : {&a, &b})
    if (part->max_swaps == out.max_swaps)
      out.argmax_inputs.insert(out.argmax_inputs.end(), part->argmax_inputs.begin(),
                               part->argmax_inputs.end());
  keep_sorted_unique(out.argmax_inputs);

  out.min_swaps = std::min(a.min_swaps, b.min_swaps);
  out.argmin_inputs.clear();
  for (const OracleSummary* part : {&a, &b})
    if (part->min_swaps == out.min_swaps)
      out.argmin_inputs.insert(out.argmin_inputs.end(), part->argmin_inputs.begin(),
                               part->argmin_inputs.end());
  keep_sorted_unique(out.argmin_inputs);
  return out;
}

namespace {

// Permutations of [1..n] whose first element is `lead`, in lexicographic
// order.
OracleSummary summarize_leading(std::size_t n, Key lead) {
  OracleSummary part;
  part.n = n;
  ArrayState perm;
  perm.push_back(lead);
  for (Key v = 1; v <= static_cast<Key>(n); ++v)
    if (v != lead) perm.push_back(v);
  do {
    record_run(part, perm);
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return part;
}

}  // namespace

OracleSummary exhaustive_summary(std::size_t n, unsigned workers) {
  require_exhaustive_range(n);
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(n));

  OracleSummary total;
  total.n = n;
  if (workers == 1) {
    for (const ArrayState& perm : enumerate_permutations(n)) record_run(total, perm);
    keep_sorted_unique(total.argmax_inputs);
    keep_sorted_unique(total.argmin_inputs);
    return total;
  }

  std::vector<std::future<OracleSummary>> tasks;
  for (unsigned w = 0; w < workers; ++w) {
    tasks.push_back(std::async(std::launch::async, [n, w, workers] {
      OracleSummary acc;
      acc.n = n;
      for (std::size_t lead = w + 1; lead <= n; lead += workers)
        acc = merge(acc, summarize_leading(n, static_cast<Key>(lead)));
      return acc;
    }));
  }
  for (auto& task : tasks) total = merge(total, task.get());
  total.n = n;
  total.mode = OracleMode::exhaustive;
  keep_sorted_unique(total.argmax_inputs);
  keep_sorted_unique(total.argmin_inputs);
  return total;
}

ArrayState random_permutation(std::size_t n, std::mt19937_64& rng) {
  ArrayState perm(n);
  std::iota(perm.begin(), perm.end(), Key{1});
  for (std::size_t k = n; k > 1; --k) {
    std::uniform_int_distribution<std::size_t> pick(0, k - 1);
    std::swap(perm[k - 1], perm[pick(rng)]);
  }
  return perm;
}

OracleSummary random_suite(std::size_t n, Count samples, std::uint64_t seed) {
  if (n < 2) throw PreconditionError("random_suite requires n >= 2");
  if (samples < 1) throw PreconditionError("random_suite requires samples >= 1");

  OracleSummary summary;
  summary.n = n;
  summary.mode = OracleMode::random;
  summary.seed = seed;
  summary.generator = "mt19937_64+fisher-yates";
  std::mt19937_64 rng(seed);
  for (Count s = 0; s < samples; ++s) record_run(summary, random_permutation(n, rng));
  keep_sorted_unique(summary.argmax_inputs);
  keep_sorted_unique(summary.argmin_inputs);
  return summary;
}

std::vector<ArrayState> max_swap_patterns(std::size_t n) {
  if (n < 3) return {};
  const Key top = static_cast<Key>(n);
  ArrayState two_up{top - 1, top};
  ArrayState three_up{top - 2, top - 1, top};
  for (Key v = top - 2; v >= 1; --v) two_up.push_back(v);
  for (Key v = top - 3; v >= 1; --v) three_up.push_back(v);
  std::vector<ArrayState> patterns{std::move(two_up), std::move(three_up)};
  std::ranges::sort(patterns);
  return patterns;
}

ArrayState min_swap_pattern(std::size_t n) {
  ArrayState pattern(n);
  if (n == 0) return pattern;
  pattern[0] = static_cast<Key>(n);
  std::iota(pattern.begin() + 1, pattern.end(), Key{1});
  return pattern;
}

}  // namespace sortlab
