#include "sortlab/sortcore.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace sortlab {

namespace {

struct AlgorithmName {
  Algorithm algo;
  std::string_view id;
};

constexpr std::array<AlgorithmName, 6> kAlgorithmNames{{
    {Algorithm::icbics, "icbics"},
    {Algorithm::exchange, "exchange"},
    {Algorithm::improved, "improved"},
    {Algorithm::icbics_desc_ineq, "icbics-desc-ineq"},
    {Algorithm::icbics_desc_loops, "icbics-desc-loops"},
    {Algorithm::std_insertion, "std-insertion"},
}};

}  // namespace

std::string_view to_string(Algorithm algo) {
  for (const auto& entry : kAlgorithmNames)
    if (entry.algo == algo) return entry.id;
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view id) {
  for (const auto& entry : kAlgorithmNames)
    if (entry.id == id) return entry.algo;
  return std::nullopt;
}

std::string_view to_string(EventKind kind) {
  return kind == EventKind::compare ? "compare" : "swap";
}

std::optional<EventKind> parse_event_kind(std::string_view s) {
  if (s == "compare") return EventKind::compare;
  if (s == "swap") return EventKind::swap;
  return std::nullopt;
}

std::string_view to_string(Phase phase) {
  switch (phase) {
    case Phase::selection:
      return "selection";
    case Phase::insertion:
      return "insertion";
    case Phase::not_applicable:
      break;
  }
  return "not_applicable";
}

std::optional<Phase> parse_phase(std::string_view s) {
  if (s == "selection") return Phase::selection;
  if (s == "insertion") return Phase::insertion;
  if (s == "not_applicable") return Phase::not_applicable;
  return std::nullopt;
}

std::string_view to_string(SortOrder order) {
  return order == SortOrder::non_decreasing ? "non-decreasing" : "non-increasing";
}

SortOrder target_order(Algorithm algo) {
  return algo == Algorithm::icbics_desc_ineq || algo == Algorithm::icbics_desc_loops
             ? SortOrder::non_increasing
             : SortOrder::non_decreasing;
}

SortReport run_sort(Algorithm algo, ArrayState input, const EventSink& sink) {
  SortReport report;
  report.algorithm = algo;
  report.n = input.size();
  std::span<Key> span(input);
  const OpCounts counts =
      sink ? sort_inplace(algo, span, sink) : sort_inplace(algo, span, NullSink{});
  report.comparisons = counts.comparisons;
  report.swaps = counts.swaps;
  report.sorted = is_sorted_in(target_order(algo), input);
  report.output = std::move(input);
  return report;
}

SortReport icbics_sort(ArrayState input, const EventSink& sink) {
  return run_sort(Algorithm::icbics, std::move(input), sink);
}

SortReport exchange_sort(ArrayState input, const EventSink& sink) {
  return run_sort(Algorithm::exchange, std::move(input), sink);
}

SortReport improved_sort(ArrayState input, const EventSink& sink) {
  return run_sort(Algorithm::improved, std::move(input), sink);
}

SortReport icbics_desc_ineq(ArrayState input, const EventSink& sink) {
  return run_sort(Algorithm::icbics_desc_ineq, std::move(input), sink);
}

SortReport icbics_desc_loopswap(ArrayState input, const EventSink& sink) {
  return run_sort(Algorithm::icbics_desc_loops, std::move(input), sink);
}

SortReport std_insertion_sort(ArrayState input, const EventSink& sink) {
  return run_sort(Algorithm::std_insertion, std::move(input), sink);
}

bool is_non_decreasing(std::span<const Key> a) { return std::ranges::is_sorted(a); }

bool is_non_increasing(std::span<const Key> a) {
  return std::ranges::is_sorted(a, std::ranges::greater{});
}

bool is_sorted_in(SortOrder order, std::span<const Key> a) {
  return order == SortOrder::non_decreasing ? is_non_decreasing(a) : is_non_increasing(a);
}

bool same_multiset(std::span<const Key> a, std::span<const Key> b) {
  return std::ranges::is_permutation(a, b);
}

ArrayState replay(ArrayState input, std::span<const TraceEvent> events) {
  const std::size_t n = input.size();
  for (const TraceEvent& ev : events) {
    if (ev.kind != EventKind::swap) continue;
    if (ev.i < 1 || ev.i > n || ev.j < 1 || ev.j > n)
      throw std::out_of_range("trace event " + std::to_string(ev.seq) +
                              " addresses a position outside [1, " + std::to_string(n) + "]");
    std::swap(input[ev.i - 1], input[ev.j - 1]);
  }
  return input;
}

}  // namespace sortlab
