#include "sortlab/report_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace sortlab {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

template <class Int>
Int parse_int(std::string_view token, std::string_view what) {
  token = trim(token);
  Int value{};
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc{} || ptr != end)
    throw ParseError("invalid " + std::string(what) + ": '" + std::string(token) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

json array_json(std::span<const ArrayState> arrays) {
  json out = json::array();
  for (const auto& a : arrays) out.push_back(a);
  return out;
}

}  // namespace

ArrayState parse_key_list(std::string_view text) {
  text = trim(text);
  ArrayState keys;
  if (text.empty()) return keys;

  // Newline-separated if there is more than one non-blank line, otherwise a
  // comma-separated single line.
  std::vector<std::string_view> lines;
  for (auto line : split(text, '\n'))
    if (!trim(line).empty()) lines.push_back(line);

  if (lines.size() > 1) {
    for (auto line : lines) keys.push_back(parse_int<Key>(line, "integer"));
    return keys;
  }
  for (auto token : split(lines.front(), ','))
    keys.push_back(parse_int<Key>(token, "integer"));
  return keys;
}

json to_json(const SortReport& report) {
  json j;
  j["algorithm"] = to_string(report.algorithm);
  j["n"] = report.n;
  j["comparisons"] = report.comparisons;
  j[report.algorithm == Algorithm::std_insertion ? "moves" : "swaps"] = report.swaps;
  j["order"] = to_string(target_order(report.algorithm));
  j["sorted"] = report.sorted;
  j["output"] = report.output;
  return j;
}

json to_json(const TraceEvent& ev) {
  json j;
  j["seq"] = ev.seq;
  j["kind"] = to_string(ev.kind);
  j["i"] = ev.i;
  j["j"] = ev.j;
  j["phase"] = to_string(ev.phase);
  if (ev.inversions) {
    j["inversions"] = ev.inversions->inversions;
    j["max_inversions"] = ev.inversions->max_inversions;
  }
  return j;
}

TraceEvent trace_event_from_json(const json& j) {
  TraceEvent ev;
  try {
    ev.seq = j.at("seq").get<Count>();
    const auto kind = parse_event_kind(j.at("kind").get<std::string>());
    const auto phase = parse_phase(j.at("phase").get<std::string>());
    if (!kind || !phase) throw ParseError("unknown kind or phase in trace event");
    ev.kind = *kind;
    ev.phase = *phase;
    ev.i = j.at("i").get<std::size_t>();
    ev.j = j.at("j").get<std::size_t>();
    if (j.contains("inversions"))
      ev.inversions = InversionSnapshot{j.at("inversions").get<Count>(),
                                        j.at("max_inversions").get<Count>()};
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed trace event: ") + e.what());
  }
  return ev;
}

void write_trace_jsonl(std::ostream& os, std::span<const TraceEvent> events) {
  for (const TraceEvent& ev : events) os << to_json(ev).dump() << '\n';
}

std::vector<TraceEvent> read_trace_jsonl(std::istream& is) {
  std::vector<TraceEvent> events;
  std::string line;
  while (std::getline(is, line)) {
    if (trim(line).empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("trace line is not JSON: ") + e.what());
    }
    events.push_back(trace_event_from_json(j));
  }
  return events;
}

json to_json(const Counterexample& cx) {
  json j;
  j["input"] = cx.input;
  if (cx.algorithm) j["algorithm"] = to_string(*cx.algorithm);
  if (cx.event_seq) j["event_seq"] = *cx.event_seq;
  if (cx.outer_index) j["outer_index"] = *cx.outer_index;
  j["expected"] = cx.expected;
  j["observed"] = cx.observed;
  return j;
}

json to_json(const VerificationVerdict& verdict) {
  json j;
  j["check"] = to_string(verdict.check);
  j["passed"] = verdict.passed;
  if (verdict.counterexample) j["counterexample"] = to_json(*verdict.counterexample);
  return j;
}

json to_json(const OracleSummary& s) {
  json j;
  j["n"] = s.n;
  j["mode"] = s.mode == OracleMode::exhaustive ? "exhaustive" : "random";
  if (s.seed) j["seed"] = *s.seed;
  if (!s.generator.empty()) j["generator"] = s.generator;
  j["inputs_examined"] = s.inputs_examined;
  j["max_swaps"] = s.max_swaps;
  j["argmax_inputs"] = array_json(s.argmax_inputs);
  j["min_swaps"] = s.min_swaps;
  j["argmin_inputs"] = array_json(s.argmin_inputs);
  j["bound_violations"] = s.bound_violations;
  if (s.first_violation) j["first_violation"] = *s.first_violation;
  return j;
}

json to_json(const InstabilityWitness& w) {
  auto pairs = [](const std::vector<TaggedKey>& v) {
    json out = json::array();
    for (const TaggedKey& tk : v) out.push_back(json::array({tk.key, std::string(1, tk.tag)}));
    return out;
  };
  json j;
  j["input"] = pairs(w.input);
  j["output"] = pairs(w.output);
  j["violated_pair"] = json::array({w.violated_pair.first, w.violated_pair.second});
  return j;
}

void write_bench_csv(std::ostream& os, std::span<const BenchRecord> records) {
  os << kBenchCsvHeader << '\n';
  for (const BenchRecord& r : records)
    os << to_string(r.algorithm) << ',' << r.n << ',' << r.rep << ',' << r.seed << ','
       << r.comparisons << ',' << r.swaps << ',' << r.wall_ns << '\n';
}

std::vector<BenchRecord> read_bench_csv(std::istream& is) {
  std::vector<BenchRecord> records;
  std::string line;
  if (!std::getline(is, line) || trim(line) != kBenchCsvHeader)
    throw ParseError("bench CSV must start with header '" + std::string(kBenchCsvHeader) + "'");
  while (std::getline(is, line)) {
    if (trim(line).empty()) continue;
    const auto fields = split(trim(line), ',');
    if (fields.size() != 7) throw ParseError("bench CSV row needs 7 fields: " + line);
    const auto algo = parse_algorithm(fields[0]);
    if (!algo) throw ParseError("unknown algorithm in bench CSV: " + std::string(fields[0]));
    records.push_back(BenchRecord{
        *algo,
        parse_int<std::size_t>(fields[1], "n"),
        parse_int<std::size_t>(fields[2], "rep"),
        parse_int<std::uint64_t>(fields[3], "seed"),
        parse_int<Count>(fields[4], "comparisons"),
        parse_int<Count>(fields[5], "swaps"),
        parse_int<std::uint64_t>(fields[6], "wall_ns"),
    });
  }
  return records;
}

json to_json(const BenchRecord& r) {
  return json{{"algorithm", to_string(r.algorithm)},
              {"n", r.n},
              {"rep", r.rep},
              {"seed", r.seed},
              {"comparisons", r.comparisons},
              {"swaps", r.swaps},
              {"wall_ns", r.wall_ns}};
}

BenchRecord bench_record_from_json(const json& j) {
  try {
    const auto algo = parse_algorithm(j.at("algorithm").get<std::string>());
    if (!algo) throw ParseError("unknown algorithm in bench record");
    return BenchRecord{*algo,
                       j.at("n").get<std::size_t>(),
                       j.at("rep").get<std::size_t>(),
                       j.at("seed").get<std::uint64_t>(),
                       j.at("comparisons").get<Count>(),
                       j.at("swaps").get<Count>(),
                       j.at("wall_ns").get<std::uint64_t>()};
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed bench record: ") + e.what());
  }
}

}  // namespace sortlab
