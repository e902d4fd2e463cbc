#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sortlab/report_io.hpp"

namespace sortlab {

struct BenchConfig {
  std::vector<std::size_t> sizes;
  std::size_t reps = 1;
  std::uint64_t seed = 1;
};

// For every size and repetition, draws one random permutation from a
// generator seeded once with `seed`, then runs all six algorithms on copies
// of it. Wall time covers the sort call only. Throws PreconditionError on
// empty sizes or reps == 0.
std::vector<BenchRecord> run_bench(const BenchConfig& config);

struct BenchSummaryRow {
  Algorithm algorithm = Algorithm::icbics;
  std::size_t n = 0;
  std::size_t samples = 0;
  double mean_wall_ns = 0;
  double mean_swaps = 0;
  double mean_comparisons = 0;
};

// One row per (algorithm, n), ordered by n then algorithm.
std::vector<BenchSummaryRow> summarize(std::span<const BenchRecord> records);

std::optional<BenchSummaryRow> find_row(std::span<const BenchSummaryRow> rows, Algorithm algo,
                                        std::size_t n);

nlohmann::json to_json(const BenchSummaryRow& row);

}  // namespace sortlab
