#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace sortlab {

using Key = std::int64_t;

// Working sequence A[1..n]. Paper-style position p (1-based) lives at
// element [p - 1]; every TraceEvent carries 1-based positions.
using ArrayState = std::vector<Key>;

using Count = std::uint64_t;

struct InversionSnapshot {
  Count inversions = 0;
  Count max_inversions = 0;

  friend bool operator==(const InversionSnapshot&, const InversionSnapshot&) = default;
};

enum class EventKind : std::uint8_t { compare, swap };

// Selection is the i = 1 pass of icbics_sort, insertion every later pass.
enum class Phase : std::uint8_t { selection, insertion, not_applicable };

// One comparison or exchange. `i` and `j` are the 1-based loop variables of
// the pseudocode, i.e. the operands of the test on A[i] and A[j]; a swap
// event exchanges exactly those two positions.
struct TraceEvent {
  EventKind kind = EventKind::compare;
  std::size_t i = 0;
  std::size_t j = 0;
  Phase phase = Phase::not_applicable;
  Count seq = 0;
  std::optional<InversionSnapshot> inversions;  // state after the event

  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

enum class Algorithm : std::uint8_t {
  icbics,
  exchange,
  improved,
  icbics_desc_ineq,
  icbics_desc_loops,
  std_insertion,
};

inline constexpr Algorithm kAllAlgorithms[] = {
    Algorithm::icbics,           Algorithm::exchange,          Algorithm::improved,
    Algorithm::icbics_desc_ineq, Algorithm::icbics_desc_loops, Algorithm::std_insertion,
};

enum class SortOrder : std::uint8_t { non_decreasing, non_increasing };

std::string_view to_string(Algorithm algo);
std::optional<Algorithm> parse_algorithm(std::string_view id);
std::string_view to_string(EventKind kind);
std::optional<EventKind> parse_event_kind(std::string_view s);
std::string_view to_string(Phase phase);
std::optional<Phase> parse_phase(std::string_view s);
std::string_view to_string(SortOrder order);

SortOrder target_order(Algorithm algo);

struct SortReport {
  Algorithm algorithm = Algorithm::icbics;
  std::size_t n = 0;
  Count comparisons = 0;
  // For std_insertion this counts element moves, each modeled as an
  // adjacent exchange.
  Count swaps = 0;
  ArrayState output;
  bool sorted = false;  // output is in target_order(algorithm)
};

}  // namespace sortlab
