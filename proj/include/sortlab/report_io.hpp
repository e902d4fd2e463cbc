#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sortlab/oracle.hpp"
#include "sortlab/types.hpp"
#include "sortlab/verify.hpp"

namespace sortlab {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Accepts a single comma-separated line or one integer per line. Blank
// input yields an empty array. Throws ParseError on anything else.
ArrayState parse_key_list(std::string_view text);

nlohmann::json to_json(const SortReport& report);
nlohmann::json to_json(const TraceEvent& ev);
nlohmann::json to_json(const Counterexample& cx);
nlohmann::json to_json(const VerificationVerdict& verdict);
nlohmann::json to_json(const OracleSummary& summary);
nlohmann::json to_json(const InstabilityWitness& witness);

TraceEvent trace_event_from_json(const nlohmann::json& j);

// One compact JSON object per line.
void write_trace_jsonl(std::ostream& os, std::span<const TraceEvent> events);
std::vector<TraceEvent> read_trace_jsonl(std::istream& is);

struct BenchRecord {
  Algorithm algorithm = Algorithm::icbics;
  std::size_t n = 0;
  std::size_t rep = 0;
  std::uint64_t seed = 0;
  Count comparisons = 0;
  Count swaps = 0;  // moves for std-insertion
  std::uint64_t wall_ns = 0;

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

inline constexpr std::string_view kBenchCsvHeader = "algorithm,n,rep,seed,comparisons,swaps,wall_ns";

void write_bench_csv(std::ostream& os, std::span<const BenchRecord> records);
std::vector<BenchRecord> read_bench_csv(std::istream& is);

nlohmann::json to_json(const BenchRecord& record);
BenchRecord bench_record_from_json(const nlohmann::json& j);

}  // namespace sortlab
