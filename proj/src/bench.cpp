#include "sortlab/bench.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>

#include "sortlab/oracle.hpp"
#include "sortlab/sortcore.hpp"
#include "sortlab/verify.hpp"

namespace sortlab {

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
  if (config.sizes.empty()) throw PreconditionError("bench needs at least one size");
  if (config.reps == 0) throw PreconditionError("bench needs reps >= 1");

  std::vector<BenchRecord> records;
  std::mt19937_64 rng(config.seed);
  for (std::size_t n : config.sizes) {
    for (std::size_t rep = 0; rep < config.reps; ++rep) {
      const ArrayState input = random_permutation(n, rng);
      for (Algorithm algo : kAllAlgorithms) {
        ArrayState work = input;
        const auto start = std::chrono::steady_clock::now();
        const OpCounts counts = sort_inplace(algo, std::span<Key>(work), NullSink{});
        const auto stop = std::chrono::steady_clock::now();
        const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start);
        records.push_back(BenchRecord{algo, n, rep, config.seed, counts.comparisons,
                                      counts.swaps, static_cast<std::uint64_t>(ns.count())});
      }
    }
  }
  return records;
}

std::vector<BenchSummaryRow> summarize(std::span<const BenchRecord> records) {
  std::map<std::pair<std::size_t, Algorithm>, BenchSummaryRow> rows;
  for (const BenchRecord& r : records) {
    BenchSummaryRow& row = rows[{r.n, r.algorithm}];
    row.algorithm = r.algorithm;
    row.n = r.n;
    ++row.samples;
    row.mean_wall_ns += static_cast<double>(r.wall_ns);
    row.mean_swaps += static_cast<double>(r.swaps);
    row.mean_comparisons += static_cast<double>(r.comparisons);
  }
  std::vector<BenchSummaryRow> out;
  for (auto& [key, row] : rows) {
    const auto count = static_cast<double>(row.samples);
    row.mean_wall_ns /= count;
    row.mean_swaps /= count;
    row.mean_comparisons /= count;
    out.push_back(row);
  }
  return out;
}

std::optional<BenchSummaryRow> find_row(std::span<const BenchSummaryRow> rows, Algorithm algo,
                                        std::size_t n) {
  for (const auto& row : rows)
    if (row.algorithm == algo && row.n == n) return row;
  return std::nullopt;
}

nlohmann::json to_json(const BenchSummaryRow& row) {
  return nlohmann::json{{"algorithm", to_string(row.algorithm)},
                        {"n", row.n},
                        {"samples", row.samples},
                        {"mean_wall_ns", row.mean_wall_ns},
                        {"mean_swaps", row.mean_swaps},
                        {"mean_comparisons", row.mean_comparisons}};
}

}  // namespace sortlab
