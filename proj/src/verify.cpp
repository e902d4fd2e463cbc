#include "sortlab/verify.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "sortlab/metrics.hpp"

namespace sortlab {

namespace {

constexpr std::array<std::pair<CheckId, std::string_view>, 7> kCheckNames{{
    {CheckId::correctness, "correctness"},
    {CheckId::pi, "pi"},
    {CheckId::lemma1, "lemma1"},
    {CheckId::theorem2, "theorem2"},
    {CheckId::theorem3, "theorem3"},
    {CheckId::theorem4, "theorem4"},
    {CheckId::instability, "instability"},
}};

std::string format_array(std::span<const Key> a) {
  std::ostringstream os;
  os << '[';
  for (std::size_t p = 0; p < a.size(); ++p) os << (p ? "," : "") << a[p];
  os << ']';
  return os.str();
}

VerificationVerdict pass(CheckId id) { return VerificationVerdict{id, true, std::nullopt}; }

VerificationVerdict fail(CheckId id, Counterexample cx) {
  return VerificationVerdict{id, false, std::move(cx)};
}

void require_distinct(const ArrayState& input, std::string_view what) {
  if (!has_distinct_keys(input))
    throw PreconditionError(std::string(what) + " requires distinct keys, got " +
                            format_array(input));
}

}  // namespace

std::string_view to_string(CheckId id) {
  for (const auto& [check, name] : kCheckNames)
    if (check == id) return name;
  return "unknown";
}

std::optional<CheckId> parse_check_id(std::string_view s) {
  for (const auto& [check, name] : kCheckNames)
    if (name == s) return check;
  return std::nullopt;
}

bool has_distinct_keys(std::span<const Key> a) {
  ArrayState sorted(a.begin(), a.end());
  std::ranges::sort(sorted);
  return std::ranges::adjacent_find(sorted) == sorted.end();
}

VerificationVerdict check_correctness(Algorithm algo, const ArrayState& input) {
  const SortReport report = run_sort(algo, input);
  const SortOrder order = target_order(algo);
  if (report.sorted && same_multiset(report.output, input)) return pass(CheckId::correctness);

  Counterexample cx;
  cx.input = input;
  cx.algorithm = algo;
  ArrayState expected = input;
  if (order == SortOrder::non_decreasing)
    std::ranges::sort(expected);
  else
    std::ranges::sort(expected, std::ranges::greater{});
  cx.expected = format_array(expected);
  cx.observed = format_array(report.output);
  return fail(CheckId::correctness, std::move(cx));
}

// ---------------------------------------------------------------------------
// PiAuditor

PiAuditor::PiAuditor(ArrayState input) : input_(input), state_(std::move(input)) {
  if (!state_.empty()) maximum_ = *std::ranges::max_element(state_);
}

void PiAuditor::close_through(std::size_t outer) {
  outer = std::min(outer, state_.size());
  for (std::size_t i = checked_ + 1; i <= outer && !failure_; ++i) {
    const auto prefix = std::span<const Key>(state_).first(i);
    const bool ordered = is_non_decreasing(prefix);
    const bool top_is_max = state_[i - 1] == maximum_;
    if (!ordered || !top_is_max) {
      Counterexample cx;
      cx.input = input_;
      cx.outer_index = i;
      cx.expected = "A[1.." + std::to_string(i) + "] non-decreasing and A[" + std::to_string(i) +
                    "] = " + std::to_string(maximum_);
      cx.observed = format_array(state_);
      failure_ = std::move(cx);
    }
  }
  checked_ = std::max(checked_, outer);
}

void PiAuditor::operator()(const TraceEvent& ev) {
  if (failure_) return;
  if (ev.i > checked_ + 1) close_through(ev.i - 1);
  if (ev.kind == EventKind::swap && ev.i >= 1 && ev.j >= 1 && ev.i <= state_.size() &&
      ev.j <= state_.size())
    std::swap(state_[ev.i - 1], state_[ev.j - 1]);
}

VerificationVerdict PiAuditor::finish() {
  close_through(state_.size());
  if (failure_) return fail(CheckId::pi, *failure_);
  return pass(CheckId::pi);
}

VerificationVerdict check_pi_invariant(const ArrayState& input) {
  require_distinct(input, "check_pi_invariant");
  PiAuditor auditor(input);
  ArrayState work = input;
  icbics_sort_inplace(std::span<Key>(work), auditor);
  return auditor.finish();
}

// ---------------------------------------------------------------------------
// Lemma1Auditor

Lemma1Auditor::Lemma1Auditor(ArrayState input)
    : input_(input), state_(std::move(input)) {
  initial_inversions_ = count_inversions(state_);
  inversions_ = initial_inversions_;
}

void Lemma1Auditor::fail(const TraceEvent& ev, std::string expected, std::string observed) {
  Counterexample cx;
  cx.input = input_;
  cx.event_seq = ev.seq;
  cx.outer_index = ev.i;
  cx.expected = std::move(expected);
  cx.observed = std::move(observed);
  failure_ = std::move(cx);
}

void Lemma1Auditor::operator()(const TraceEvent& ev) {
  if (failure_ || ev.kind != EventKind::swap) return;
  if (ev.i < 1 || ev.j < 1 || ev.i > state_.size() || ev.j > state_.size()) {
    fail(ev, "swap positions in [1, n]",
         "(" + std::to_string(ev.i) + "," + std::to_string(ev.j) + ")");
    return;
  }
  std::swap(state_[ev.i - 1], state_[ev.j - 1]);
  const Count after = count_inversions(state_);
  const auto delta = static_cast<long long>(after) - static_cast<long long>(inversions_);
  inversions_ = after;

  long long expected = 0;
  if (ev.phase == Phase::selection) {
    expected = 1;
    ++selection_swaps_;
  } else if (ev.phase == Phase::insertion) {
    expected = -1;
    ++insertion_swaps_;
  } else {
    fail(ev, "selection or insertion phase", std::string(to_string(ev.phase)));
    return;
  }
  if (delta != expected)
    fail(ev, "inversion delta " + std::to_string(expected),
         "inversion delta " + std::to_string(delta));
}

VerificationVerdict Lemma1Auditor::finish() {
  if (!failure_ && inversions_ != 0) {
    Counterexample cx;
    cx.input = input_;
    cx.expected = "0 inversions after the run";
    cx.observed = std::to_string(inversions_) + " inversions";
    failure_ = std::move(cx);
  }
  if (!failure_ && insertion_swaps_ != initial_inversions_ + selection_swaps_) {
    Counterexample cx;
    cx.input = input_;
    cx.expected = "insertion swaps = " + std::to_string(initial_inversions_ + selection_swaps_);
    cx.observed = "insertion swaps = " + std::to_string(insertion_swaps_);
    failure_ = std::move(cx);
  }
  if (failure_) return sortlab::fail(CheckId::lemma1, *failure_);
  return pass(CheckId::lemma1);
}

VerificationVerdict check_lemma1(const ArrayState& input) {
  require_distinct(input, "check_lemma1");
  Lemma1Auditor auditor(input);
  ArrayState work = input;
  icbics_sort_inplace(std::span<Key>(work), auditor);
  return auditor.finish();
}

// ---------------------------------------------------------------------------
// Theorem bounds

VerificationVerdict check_theorem_bound(CheckId which, const ArrayState& input) {
  if (which != CheckId::theorem2 && which != CheckId::theorem3 && which != CheckId::theorem4)
    throw std::invalid_argument("check_theorem_bound: not a theorem check: " +
                                std::string(to_string(which)));
  require_distinct(input, "check_theorem_bound");
  if (input.size() < 2)
    throw PreconditionError("check_theorem_bound requires n >= 2, got n = " +
                            std::to_string(input.size()));

  const Count inversions = count_inversions(input);
  const SwapBounds bounds = swap_bounds(input.size(), inversions);
  const Count swaps = icbics_sort(input).swaps;

  bool ok = true;
  std::string expected;
  switch (which) {
    case CheckId::theorem2:
      ok = swaps <= bounds.theorem2_upper;
      expected = "swaps <= I_max + 1 = " + std::to_string(bounds.theorem2_upper);
      break;
    case CheckId::theorem3:
      ok = swaps <= bounds.theorem3_upper;
      expected = "swaps <= I + 2(n-1) = " + std::to_string(bounds.theorem3_upper);
      break;
    default:
      ok = swaps >= bounds.theorem4_lower;
      expected = "swaps >= n - 1 = " + std::to_string(bounds.theorem4_lower);
      break;
  }
  if (ok) return pass(which);

  Counterexample cx;
  cx.input = input;
  cx.expected = std::move(expected);
  cx.observed = "I = " + std::to_string(inversions) + ", swaps = " + std::to_string(swaps);
  return fail(which, std::move(cx));
}

VerificationVerdict check_theorem_bounds(const ArrayState& input) {
  for (CheckId which : {CheckId::theorem2, CheckId::theorem3, CheckId::theorem4}) {
    VerificationVerdict verdict = check_theorem_bound(which, input);
    if (!verdict.passed) return verdict;
  }
  return pass(CheckId::theorem2);
}

VerificationVerdict rerun(const VerificationVerdict& verdict) {
  if (!verdict.counterexample) return verdict;
  const Counterexample& cx = *verdict.counterexample;
  switch (verdict.check) {
    case CheckId::correctness:
      return check_correctness(cx.algorithm.value_or(Algorithm::icbics), cx.input);
    case CheckId::pi:
      return check_pi_invariant(cx.input);
    case CheckId::lemma1:
      return check_lemma1(cx.input);
    case CheckId::theorem2:
    case CheckId::theorem3:
    case CheckId::theorem4:
      return check_theorem_bound(verdict.check, cx.input);
    case CheckId::instability: {
      const std::size_t max_n = std::max<std::size_t>(2, cx.input.size());
      if (find_instability_witness(max_n)) return pass(CheckId::instability);
      return verdict;
    }
  }
  return verdict;
}

// ---------------------------------------------------------------------------
// Instability

std::optional<InstabilityWitness> instability_witness_for(std::vector<TaggedKey> input) {
  {
    std::vector<char> tags;
    for (const TaggedKey& tk : input) tags.push_back(tk.tag);
    std::ranges::sort(tags);
    if (std::ranges::adjacent_find(tags) != tags.end())
      throw PreconditionError("instability_witness_for requires unique tags");
  }

  std::vector<TaggedKey> output = input;
  icbics_sort_inplace(std::span<TaggedKey>(output), NullSink{}, &TaggedKey::key);

  auto output_position = [&](char tag) {
    return std::ranges::find(output, tag, &TaggedKey::tag) - output.begin();
  };
  for (std::size_t p = 0; p < input.size(); ++p) {
    for (std::size_t q = p + 1; q < input.size(); ++q) {
      if (input[p].key != input[q].key) continue;
      if (output_position(input[p].tag) > output_position(input[q].tag))
        return InstabilityWitness{std::move(input), std::move(output), {p + 1, q + 1}};
    }
  }
  return std::nullopt;
}

std::optional<InstabilityWitness> find_instability_witness(std::size_t max_n) {
  constexpr std::size_t kMaxSearchLength = 10;
  constexpr Key kAlphabet = 3;
  if (max_n < 2)
    throw PreconditionError("find_instability_witness requires max_n >= 2, got " +
                            std::to_string(max_n));
  max_n = std::min(max_n, kMaxSearchLength);

  for (std::size_t n = 2; n <= max_n; ++n) {
    ArrayState keys(n, 1);
    while (true) {
      if (!has_distinct_keys(keys)) {
        std::vector<TaggedKey> tagged;
        for (std::size_t p = 0; p < n; ++p)
          tagged.push_back({keys[p], static_cast<char>('a' + p)});
        if (auto witness = instability_witness_for(std::move(tagged))) return witness;
      }
      // Advance the odometer; the last position varies fastest.
      std::size_t pos = n;
      while (pos > 0 && keys[pos - 1] == kAlphabet) keys[--pos] = 1;
      if (pos == 0) break;
      ++keys[pos - 1];
    }
  }
  return std::nullopt;
}

}  // namespace sortlab
