#pragma once

#include <cstdint>
#include <iterator>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "sortlab/types.hpp"

namespace sortlab {

class EnumerationGuardError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

inline constexpr std::size_t kMaxEnumerationLength = 10;
inline constexpr std::size_t kMaxExhaustiveLength = 8;

Count factorial(std::size_t n);

// All permutations of [1..n] in lexicographic order, produced lazily.
// Throws EnumerationGuardError for n > kMaxEnumerationLength.
class Permutations {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = ArrayState;
    using difference_type = std::ptrdiff_t;
    using pointer = const ArrayState*;
    using reference = const ArrayState&;

    iterator() = default;
    explicit iterator(std::size_t n);

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }

    bool operator==(std::default_sentinel_t) const { return done_; }

   private:
    ArrayState current_;
    bool done_ = true;
  };

  explicit Permutations(std::size_t n);

  iterator begin() const { return iterator(n_); }
  std::default_sentinel_t end() const { return {}; }
  std::size_t size() const { return static_cast<std::size_t>(factorial(n_)); }

 private:
  std::size_t n_;
};

inline Permutations enumerate_permutations(std::size_t n) { return Permutations(n); }

enum class OracleMode : std::uint8_t { exhaustive, random };

struct OracleSummary {
  std::size_t n = 0;
  OracleMode mode = OracleMode::exhaustive;
  std::optional<std::uint64_t> seed;  // random mode only
  std::string generator;              // random mode only
  Count inputs_examined = 0;
  Count max_swaps = 0;
  std::vector<ArrayState> argmax_inputs;  // sorted lexicographically
  Count min_swaps = 0;
  std::vector<ArrayState> argmin_inputs;  // sorted lexicographically
  Count bound_violations = 0;
  std::optional<ArrayState> first_violation;

  friend bool operator==(const OracleSummary&, const OracleSummary&) = default;
};

// Folds one icbics_sort run into the summary: swap extremes, their
// attaining inputs, and violations of the three closed-form bounds.
void record_run(OracleSummary& summary, const ArrayState& input);

// Combines two partial summaries over disjoint inputs. The result does not
// depend on argument order.
OracleSummary merge(const OracleSummary& a, const OracleSummary& b);

// Runs icbics_sort on all n! permutations, split across `workers` threads
// by leading element. Requires 2 <= n <= kMaxExhaustiveLength.
OracleSummary exhaustive_summary(std::size_t n, unsigned workers = 1);

// Uniform random permutation of [1..n] by Fisher-Yates.
ArrayState random_permutation(std::size_t n, std::mt19937_64& rng);

// `samples` seeded random permutations of [1..n]. Requires n >= 2 and
// samples >= 1.
OracleSummary random_suite(std::size_t n, Count samples, std::uint64_t seed);

// The two inputs claimed to maximize icbics_sort swaps for n >= 3:
// [n-1, n, n-2, ..., 1] and [n-2, n-1, n, n-3, ..., 1], sorted
// lexicographically. Empty for n < 3.
std::vector<ArrayState> max_swap_patterns(std::size_t n);

// The unique claimed minimizer [n, 1, 2, ..., n-1] (n >= 2).
ArrayState min_swap_pattern(std::size_t n);

}  // namespace sortlab
