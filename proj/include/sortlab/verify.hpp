#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sortlab/sortcore.hpp"

namespace sortlab {

enum class CheckId : std::uint8_t {
  correctness,
  pi,
  lemma1,
  theorem2,
  theorem3,
  theorem4,
  instability,
};

std::string_view to_string(CheckId id);
std::optional<CheckId> parse_check_id(std::string_view s);

// Thrown when a check is handed an input outside its domain (duplicate keys
// where distinct keys are required, n too small).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Counterexample {
  ArrayState input;
  std::optional<Algorithm> algorithm;  // set for correctness failures
  std::optional<Count> event_seq;
  std::optional<std::size_t> outer_index;  // 1-based
  std::string expected;
  std::string observed;
};

struct VerificationVerdict {
  CheckId check = CheckId::correctness;
  bool passed = true;
  std::optional<Counterexample> counterexample;
};

bool has_distinct_keys(std::span<const Key> a);

// Sorts `input` with `algo`; passes iff the output is ordered for that
// algorithm and is a permutation of the input.
VerificationVerdict check_correctness(Algorithm algo, const ArrayState& input);

// Streaming auditor for the prefix property checked after each outer pass
// of icbics_sort: A[1..i] is non-decreasing and A[i] is the array maximum.
// Feed it the trace of one run, then call finish().
class PiAuditor {
 public:
  explicit PiAuditor(ArrayState input);
  void operator()(const TraceEvent& ev);
  VerificationVerdict finish();

 private:
  void close_through(std::size_t outer);

  ArrayState input_;
  ArrayState state_;
  Key maximum_ = 0;
  std::size_t checked_ = 0;
  std::optional<Counterexample> failure_;
};

// Streaming auditor for the per-swap inversion deltas: +1 for every
// selection-phase swap, -1 for every insertion-phase swap. finish() also
// checks that the run ends with zero inversions and that
// insertion swaps = I + selection swaps.
class Lemma1Auditor {
 public:
  explicit Lemma1Auditor(ArrayState input);
  void operator()(const TraceEvent& ev);
  VerificationVerdict finish();

  Count selection_swaps() const { return selection_swaps_; }
  Count insertion_swaps() const { return insertion_swaps_; }

 private:
  void fail(const TraceEvent& ev, std::string expected, std::string observed);

  ArrayState input_;
  ArrayState state_;
  Count initial_inversions_ = 0;
  Count inversions_ = 0;
  Count selection_swaps_ = 0;
  Count insertion_swaps_ = 0;
  std::optional<Counterexample> failure_;
};

// Both require distinct keys and throw PreconditionError otherwise.
VerificationVerdict check_pi_invariant(const ArrayState& input);
VerificationVerdict check_lemma1(const ArrayState& input);

// Checks one bound (which must be theorem2, theorem3 or theorem4) for a
// single icbics_sort run. Requires distinct keys and n >= 2.
VerificationVerdict check_theorem_bound(CheckId which, const ArrayState& input);

// All three bounds: max(0, n-1) <= swaps <= min(I_max + 1, I + 2(n-1)).
// A failing verdict names the first violated theorem; a passing one
// reports theorem2.
VerificationVerdict check_theorem_bounds(const ArrayState& input);

// Re-runs the check named by a verdict on its stored counterexample input.
VerificationVerdict rerun(const VerificationVerdict& verdict);

struct TaggedKey {
  Key key = 0;
  char tag = 'a';

  friend bool operator==(const TaggedKey&, const TaggedKey&) = default;
};

struct InstabilityWitness {
  std::vector<TaggedKey> input;
  std::vector<TaggedKey> output;
  // 1-based input positions of two equal keys whose order flips.
  std::pair<std::size_t, std::size_t> violated_pair{0, 0};
};

// Runs icbics_sort on `input` comparing keys only and reports the first
// equal-key pair (in input position order) whose relative order inverts.
std::optional<InstabilityWitness> instability_witness_for(std::vector<TaggedKey> input);

// Searches n = 2..max_n, key sequences over {1, 2, 3} with a repeated key,
// in lexicographic order; tags a, b, c, ... are assigned by position.
// Throws PreconditionError if max_n < 2.
std::optional<InstabilityWitness> find_instability_witness(std::size_t max_n);

}  // namespace sortlab
