#pragma once

#include <concepts>
#include <functional>
#include <span>
#include <utility>

#include "sortlab/types.hpp"

namespace sortlab {

// Type-erased event sink. An empty sink disables tracing.
using EventSink = std::function<void(const TraceEvent&)>;

template <class S>
concept TraceSink = std::invocable<S&, const TraceEvent&>;

struct NullSink {
  void operator()(const TraceEvent&) const noexcept {}
};

struct OpCounts {
  Count comparisons = 0;
  Count swaps = 0;
};

namespace detail {

template <TraceSink Sink>
class Emitter {
 public:
  explicit Emitter(Sink& sink) : sink_(sink) {}

  void compare(std::size_t i, std::size_t j, Phase phase) {
    ++counts_.comparisons;
    emit(EventKind::compare, i, j, phase);
  }

  void swap(std::size_t i, std::size_t j, Phase phase) {
    ++counts_.swaps;
    emit(EventKind::swap, i, j, phase);
  }

  OpCounts counts() const { return counts_; }

 private:
  void emit(EventKind kind, std::size_t i, std::size_t j, Phase phase) {
    sink_(TraceEvent{kind, i, j, phase, seq_++, std::nullopt});
  }

  Sink& sink_;
  Count seq_ = 0;
  OpCounts counts_;
};

}  // namespace detail

// In-place engines. Elements are ordered by `proj(x) < proj(y)` only, so
// callers can carry payloads (tags) that the ordering never looks at.
// Internal indices are 0-based; events report 1-based positions.

template <class T, TraceSink Sink, class Proj = std::identity>
OpCounts icbics_sort_inplace(std::span<T> a, Sink&& sink, Proj proj = {}) {
  detail::Emitter<std::remove_reference_t<Sink>> emit(sink);
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Phase phase = i == 0 ? Phase::selection : Phase::insertion;
    for (std::size_t j = 0; j < n; ++j) {
      emit.compare(i + 1, j + 1, phase);
      if (std::invoke(proj, a[i]) < std::invoke(proj, a[j])) {
        std::ranges::swap(a[i], a[j]);
        emit.swap(i + 1, j + 1, phase);
      }
    }
  }
  return emit.counts();
}

template <class T, TraceSink Sink, class Proj = std::identity>
OpCounts exchange_sort_inplace(std::span<T> a, Sink&& sink, Proj proj = {}) {
  detail::Emitter<std::remove_reference_t<Sink>> emit(sink);
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      emit.compare(i + 1, j + 1, Phase::not_applicable);
      if (std::invoke(proj, a[j]) < std::invoke(proj, a[i])) {
        std::ranges::swap(a[i], a[j]);
        emit.swap(i + 1, j + 1, Phase::not_applicable);
      }
    }
  }
  return emit.counts();
}

template <class T, TraceSink Sink, class Proj = std::identity>
OpCounts improved_sort_inplace(std::span<T> a, Sink&& sink, Proj proj = {}) {
  detail::Emitter<std::remove_reference_t<Sink>> emit(sink);
  const std::size_t n = a.size();
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      emit.compare(i + 1, j + 1, Phase::not_applicable);
      if (std::invoke(proj, a[i]) < std::invoke(proj, a[j])) {
        std::ranges::swap(a[i], a[j]);
        emit.swap(i + 1, j + 1, Phase::not_applicable);
      }
    }
  }
  return emit.counts();
}

// icbics with the test reversed: swap when A[i] > A[j].
template <class T, TraceSink Sink, class Proj = std::identity>
OpCounts icbics_desc_ineq_inplace(std::span<T> a, Sink&& sink, Proj proj = {}) {
  detail::Emitter<std::remove_reference_t<Sink>> emit(sink);
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      emit.compare(i + 1, j + 1, Phase::not_applicable);
      if (std::invoke(proj, a[j]) < std::invoke(proj, a[i])) {
        std::ranges::swap(a[i], a[j]);
        emit.swap(i + 1, j + 1, Phase::not_applicable);
      }
    }
  }
  return emit.counts();
}

// icbics with the loops exchanged: j is the outer variable, the test is
// unchanged (swap when A[i] < A[j]).
template <class T, TraceSink Sink, class Proj = std::identity>
OpCounts icbics_desc_loopswap_inplace(std::span<T> a, Sink&& sink, Proj proj = {}) {
  detail::Emitter<std::remove_reference_t<Sink>> emit(sink);
  const std::size_t n = a.size();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      emit.compare(i + 1, j + 1, Phase::not_applicable);
      if (std::invoke(proj, a[i]) < std::invoke(proj, a[j])) {
        std::ranges::swap(a[i], a[j]);
        emit.swap(i + 1, j + 1, Phase::not_applicable);
      }
    }
  }
  return emit.counts();
}

// Textbook insertion sort scanning back from the end of the sorted prefix
// and shifting. Each shift is reported as the adjacent exchange
// (k + 1, k) it is equivalent to, so a replay of the trace ends in the
// same state.
template <class T, TraceSink Sink, class Proj = std::identity>
OpCounts std_insertion_sort_inplace(std::span<T> a, Sink&& sink, Proj proj = {}) {
  detail::Emitter<std::remove_reference_t<Sink>> emit(sink);
  const std::size_t n = a.size();
  for (std::size_t i = 1; i < n; ++i) {
    T moving = std::move(a[i]);
    std::size_t k = i;
    while (k > 0) {
      emit.compare(k + 1, k, Phase::not_applicable);
      if (!(std::invoke(proj, moving) < std::invoke(proj, a[k - 1]))) break;
      a[k] = std::move(a[k - 1]);
      emit.swap(k + 1, k, Phase::not_applicable);
      --k;
    }
    a[k] = std::move(moving);
  }
  return emit.counts();
}

template <class T, TraceSink Sink, class Proj = std::identity>
OpCounts sort_inplace(Algorithm algo, std::span<T> a, Sink&& sink, Proj proj = {}) {
  switch (algo) {
    case Algorithm::icbics:
      return icbics_sort_inplace(a, sink, proj);
    case Algorithm::exchange:
      return exchange_sort_inplace(a, sink, proj);
    case Algorithm::improved:
      return improved_sort_inplace(a, sink, proj);
    case Algorithm::icbics_desc_ineq:
      return icbics_desc_ineq_inplace(a, sink, proj);
    case Algorithm::icbics_desc_loops:
      return icbics_desc_loopswap_inplace(a, sink, proj);
    case Algorithm::std_insertion:
      return std_insertion_sort_inplace(a, sink, proj);
  }
  return {};
}

SortReport icbics_sort(ArrayState input, const EventSink& sink = {});
SortReport exchange_sort(ArrayState input, const EventSink& sink = {});
SortReport improved_sort(ArrayState input, const EventSink& sink = {});
SortReport icbics_desc_ineq(ArrayState input, const EventSink& sink = {});
SortReport icbics_desc_loopswap(ArrayState input, const EventSink& sink = {});
SortReport std_insertion_sort(ArrayState input, const EventSink& sink = {});

SortReport run_sort(Algorithm algo, ArrayState input, const EventSink& sink = {});

bool is_non_decreasing(std::span<const Key> a);
bool is_non_increasing(std::span<const Key> a);
bool is_sorted_in(SortOrder order, std::span<const Key> a);
bool same_multiset(std::span<const Key> a, std::span<const Key> b);

// Applies every swap event of `events` to a copy of `input`. Throws
// std::out_of_range on a position outside [1, n].
ArrayState replay(ArrayState input, std::span<const TraceEvent> events);

// Sink that buffers every event, for callers that want the whole trace.
class TraceRecorder {
 public:
  void operator()(const TraceEvent& ev) { events_.push_back(ev); }
  const std::vector<TraceEvent>& events() const { return events_; }
  EventSink as_sink() {
    return [this](const TraceEvent& ev) { events_.push_back(ev); };
  }

 private:
  std::vector<TraceEvent> events_;
};

}  // namespace sortlab
