#include "sortlab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "sortlab/bench.hpp"
#include "sortlab/metrics.hpp"
#include "sortlab/oracle.hpp"
#include "sortlab/report_io.hpp"
#include "sortlab/sortcore.hpp"
#include "sortlab/verify.hpp"

namespace sortlab {

using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ArrayState load_input(const std::string& inline_list, const std::string& file) {
  try {
    if (!file.empty()) return parse_key_list(read_file(file));
    return parse_key_list(inline_list);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
}

template <class T>
std::vector<T> parse_list(const std::string& text, std::string_view what) {
  std::vector<T> values;
  try {
    for (Key k : parse_key_list(text)) {
      if (k < 0) throw ParseError("negative value");
      values.push_back(static_cast<T>(k));
    }
  } catch (const ParseError& e) {
    throw UsageError("invalid " + std::string(what) + ": " + e.what());
  }
  return values;
}

// ---------------------------------------------------------------------------
// sort

struct SortArgs {
  std::string algo;
  std::string input;
  std::string input_file;
  std::string trace_path;
  bool inversions = false;
};

int cmd_sort(const SortArgs& args, std::ostream& out) {
  const auto algo = parse_algorithm(args.algo);
  if (!algo) throw UsageError("unknown algorithm '" + args.algo + "'");
  const ArrayState input = load_input(args.input, args.input_file);

  if (args.trace_path.empty()) {
    out << to_json(run_sort(*algo, input)).dump() << '\n';
    return kExitOk;
  }

  TraceRecorder recorder;
  const SortReport report = run_sort(*algo, input, recorder.as_sink());
  std::vector<TraceEvent> events = recorder.events();
  if (args.inversions) annotate_inversions(input, events);

  std::ofstream trace(args.trace_path);
  if (!trace) throw UsageError("cannot write trace to '" + args.trace_path + "'");
  write_trace_jsonl(trace, events);
  out << to_json(report).dump() << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------
// replay

struct ReplayArgs {
  std::string input;
  std::string input_file;
  std::string trace_path;
};

int cmd_replay(const ReplayArgs& args, std::ostream& out) {
  const ArrayState input = load_input(args.input, args.input_file);
  std::ifstream trace(args.trace_path);
  if (!trace) throw UsageError("cannot open trace '" + args.trace_path + "'");
  std::vector<TraceEvent> events;
  try {
    events = read_trace_jsonl(trace);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
  ArrayState output;
  try {
    output = replay(input, events);
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
  out << json{{"n", input.size()}, {"events", events.size()}, {"output", output}}.dump() << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string checks = "correctness,pi,lemma1,theorem2,theorem3,theorem4,instability";
  std::size_t n_max = 7;
  std::size_t samples = 100;
  std::uint64_t seed = 42;
  unsigned workers = 1;
};

constexpr std::size_t kRandomLength = 64;

struct CheckOutcome {
  explicit CheckOutcome(CheckId id = CheckId::correctness) : check(id) {}

  CheckId check;
  bool passed = true;
  Count inputs_examined = 0;
  std::optional<Counterexample> counterexample;
  json details = json::object();

  void absorb(const VerificationVerdict& verdict) {
    ++inputs_examined;
    if (!verdict.passed && passed) {
      passed = false;
      counterexample = verdict.counterexample;
    }
  }

  void fail_with(Counterexample cx) {
    if (passed) counterexample = std::move(cx);
    passed = false;
  }

  json to_json() const {
    json j{{"check", to_string(check)}, {"passed", passed}, {"inputs_examined", inputs_examined}};
    if (counterexample) j["counterexample"] = sortlab::to_json(*counterexample);
    for (auto& [key, value] : details.items()) j[key] = value;
    return j;
  }
};

ArrayState random_distinct(std::mt19937_64& rng) { return random_permutation(kRandomLength, rng); }

ArrayState random_with_duplicates(std::mt19937_64& rng) {
  std::uniform_int_distribution<Key> pick(1, static_cast<Key>(kRandomLength / 4));
  ArrayState a(kRandomLength);
  for (Key& k : a) k = pick(rng);
  return a;
}

CheckOutcome run_correctness(const VerifyArgs& args) {
  CheckOutcome outcome{CheckId::correctness};
  for (std::size_t n = 0; n <= args.n_max; ++n)
    for (const ArrayState& perm : enumerate_permutations(n))
      for (Algorithm algo : kAllAlgorithms) outcome.absorb(check_correctness(algo, perm));

  std::mt19937_64 rng(args.seed);
  for (std::size_t s = 0; s < args.samples; ++s) {
    const ArrayState input = s % 2 == 0 ? random_distinct(rng) : random_with_duplicates(rng);
    for (Algorithm algo : kAllAlgorithms) outcome.absorb(check_correctness(algo, input));
  }
  return outcome;
}

template <class Check>
CheckOutcome run_per_input(CheckId id, const VerifyArgs& args, std::size_t min_n, Check check) {
  CheckOutcome outcome{id};
  for (std::size_t n = min_n; n <= args.n_max; ++n)
    for (const ArrayState& perm : enumerate_permutations(n)) outcome.absorb(check(perm));
  std::mt19937_64 rng(args.seed);
  for (std::size_t s = 0; s < args.samples; ++s) outcome.absorb(check(random_distinct(rng)));
  return outcome;
}

std::string format(const std::vector<ArrayState>& arrays) { return json(arrays).dump(); }

CheckOutcome run_theorem(CheckId id, const VerifyArgs& args,
                         const std::vector<OracleSummary>& summaries) {
  CheckOutcome outcome = run_per_input(
      id, args, 2, [id](const ArrayState& input) { return check_theorem_bound(id, input); });

  json per_n = json::array();
  for (const OracleSummary& s : summaries) {
    const std::size_t n = s.n;
    json entry{{"n", n}};
    Counterexample cx;
    cx.input = ArrayState{};
    switch (id) {
      case CheckId::theorem2: {
        entry["max_swaps"] = s.max_swaps;
        entry["argmax_inputs"] = s.argmax_inputs;
        if (s.max_swaps != max_inversions(n) + 1) {
          cx.input = s.argmax_inputs.front();
          cx.expected = "max swaps = " + std::to_string(max_inversions(n) + 1);
          cx.observed = "max swaps = " + std::to_string(s.max_swaps);
          outcome.fail_with(cx);
        } else if (n >= 3 && s.argmax_inputs != max_swap_patterns(n)) {
          cx.input = s.argmax_inputs.front();
          cx.expected = "argmax = " + format(max_swap_patterns(n));
          cx.observed = "argmax = " + format(s.argmax_inputs);
          outcome.fail_with(cx);
        }
        break;
      }
      case CheckId::theorem3: {
        ArrayState sorted(n);
        std::iota(sorted.begin(), sorted.end(), Key{1});
        const Count swaps = icbics_sort(sorted).swaps;
        entry["sorted_input_swaps"] = swaps;
        if (swaps != 2 * (n - 1)) {
          cx.input = sorted;
          cx.expected = "swaps = " + std::to_string(2 * (n - 1));
          cx.observed = "swaps = " + std::to_string(swaps);
          outcome.fail_with(cx);
        }
        break;
      }
      default: {
        entry["min_swaps"] = s.min_swaps;
        entry["argmin_inputs"] = s.argmin_inputs;
        const std::vector<ArrayState> expected{min_swap_pattern(n)};
        if (s.min_swaps != n - 1 || s.argmin_inputs != expected) {
          cx.input = s.argmin_inputs.front();
          cx.expected = "min swaps = " + std::to_string(n - 1) + ", argmin = " + format(expected);
          cx.observed = "min swaps = " + std::to_string(s.min_swaps) +
                        ", argmin = " + format(s.argmin_inputs);
          outcome.fail_with(cx);
        }
        break;
      }
    }
    entry["bound_violations"] = s.bound_violations;
    per_n.push_back(std::move(entry));
  }
  outcome.details["exhaustive"] = std::move(per_n);

  if (args.samples > 0) {
    const OracleSummary random = random_suite(kRandomLength, args.samples, args.seed);
    outcome.details["random"] = to_json(random);
    if (random.bound_violations != 0) {
      Counterexample cx;
      cx.input = *random.first_violation;
      cx.expected = "0 bound violations";
      cx.observed = std::to_string(random.bound_violations) + " bound violations";
      outcome.fail_with(std::move(cx));
    }
  }
  return outcome;
}

CheckOutcome run_instability(const VerifyArgs& args) {
  CheckOutcome outcome{CheckId::instability};
  const std::size_t max_n = std::max<std::size_t>(args.n_max, 2);
  const auto witness = find_instability_witness(max_n);
  ++outcome.inputs_examined;
  if (witness) {
    outcome.details["witness"] = to_json(*witness);
  } else {
    Counterexample cx;
    cx.input = ArrayState(max_n, 1);
    cx.expected = "an equal-key pair whose order inverts";
    cx.observed = "no witness for n <= " + std::to_string(max_n);
    outcome.fail_with(std::move(cx));
  }
  return outcome;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  if (args.n_max > kMaxExhaustiveLength)
    throw UsageError("--n-max must be <= " + std::to_string(kMaxExhaustiveLength));

  std::vector<CheckId> checks;
  {
    std::string token;
    std::istringstream list(args.checks);
    while (std::getline(list, token, ',')) {
      if (token.empty()) continue;
      const auto id = parse_check_id(token);
      if (!id) throw UsageError("unknown check '" + token + "'");
      if (std::ranges::find(checks, *id) == checks.end()) checks.push_back(*id);
    }
  }
  if (checks.empty()) throw UsageError("no checks selected");

  std::vector<OracleSummary> summaries;
  const bool needs_oracle = std::ranges::any_of(checks, [](CheckId id) {
    return id == CheckId::theorem2 || id == CheckId::theorem3 || id == CheckId::theorem4;
  });
  if (needs_oracle)
    for (std::size_t n = 2; n <= args.n_max; ++n)
      summaries.push_back(exhaustive_summary(n, args.workers));

  json results = json::array();
  bool all_passed = true;
  for (CheckId id : checks) {
    CheckOutcome outcome;
    switch (id) {
      case CheckId::correctness:
        outcome = run_correctness(args);
        break;
      case CheckId::pi:
        outcome = run_per_input(id, args, 1, check_pi_invariant);
        break;
      case CheckId::lemma1:
        outcome = run_per_input(id, args, 1, check_lemma1);
        break;
      case CheckId::theorem2:
      case CheckId::theorem3:
      case CheckId::theorem4:
        outcome = run_theorem(id, args, summaries);
        break;
      case CheckId::instability:
        outcome = run_instability(args);
        break;
    }
    if (!outcome.passed && all_passed && outcome.counterexample)
      err << "first counterexample (" << to_string(id)
          << "): " << to_json(*outcome.counterexample).dump() << '\n';
    all_passed = all_passed && outcome.passed;
    results.push_back(outcome.to_json());
  }

  json summary{{"passed", all_passed},
               {"n_max", args.n_max},
               {"samples", args.samples},
               {"seed", args.seed},
               {"checks", std::move(results)}};
  out << summary.dump(2) << '\n';
  return all_passed ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------------------
// bench

struct BenchArgs {
  std::string sizes;
  std::size_t reps = 1;
  std::uint64_t seed = 1;
  std::string format = "csv";
  std::string out_path;
};

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  BenchConfig config;
  config.sizes = parse_list<std::size_t>(args.sizes, "--sizes");
  config.reps = args.reps;
  config.seed = args.seed;
  if (config.sizes.empty()) throw UsageError("--sizes must list at least one length");
  if (config.reps == 0) throw UsageError("--reps must be >= 1");

  const std::vector<BenchRecord> records = run_bench(config);
  const std::vector<BenchSummaryRow> rows = summarize(records);

  std::ofstream file;
  if (!args.out_path.empty()) {
    file.open(args.out_path);
    if (!file) throw UsageError("cannot write '" + args.out_path + "'");
  }
  std::ostream& sink = args.out_path.empty() ? out : file;

  if (args.format == "csv") {
    write_bench_csv(sink, records);
    // The summary stays off the CSV stream so the file parses as one table.
    for (const auto& row : rows) err << "summary " << to_json(row).dump() << '\n';
  } else {
    json records_json = json::array();
    for (const auto& r : records) records_json.push_back(to_json(r));
    json summary_json = json::array();
    for (const auto& row : rows) summary_json.push_back(to_json(row));
    sink << json{{"records", std::move(records_json)}, {"summary", std::move(summary_json)}}.dump(2)
         << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Instrumented sorting lab: traces, exhaustive verification and benchmarks"};
  app.name("sortlab");
  app.require_subcommand(1);

  SortArgs sort_args;
  auto* sort = app.add_subcommand("sort", "Sort one input and print a JSON report");
  sort->add_option("--algo", sort_args.algo,
                   "icbics | exchange | improved | icbics-desc-ineq | icbics-desc-loops | "
                   "std-insertion")
      ->required();
  auto* sort_inline = sort->add_option("--input", sort_args.input, "Comma-separated integers");
  auto* sort_file =
      sort->add_option("--input-file", sort_args.input_file, "File with integers");
  sort_inline->excludes(sort_file);
  sort->add_option("--trace", sort_args.trace_path, "Write the event trace as JSONL");
  sort->add_flag("--inversions", sort_args.inversions,
                 "Attach inversion counts to every trace event");

  ReplayArgs replay_args;
  auto* replay_cmd = app.add_subcommand("replay", "Apply a JSONL trace to an input");
  auto* replay_inline = replay_cmd->add_option("--input", replay_args.input);
  auto* replay_file = replay_cmd->add_option("--input-file", replay_args.input_file);
  replay_inline->excludes(replay_file);
  replay_cmd->add_option("--trace", replay_args.trace_path)->required();

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run correctness and swap-bound checks");
  verify->add_option("--checks", verify_args.checks, "Comma-separated check names")
      ->capture_default_str();
  verify->add_option("--n-max", verify_args.n_max, "Largest exhaustive length (<= 8)")
      ->capture_default_str();
  verify->add_option("--samples", verify_args.samples, "Random inputs per check (n = 64)")
      ->capture_default_str();
  verify->add_option("--seed", verify_args.seed)->capture_default_str();
  verify->add_option("--workers", verify_args.workers, "Threads for exhaustive enumeration")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Time all algorithms on seeded random inputs");
  bench->add_option("--sizes", bench_args.sizes, "Comma-separated lengths")->required();
  bench->add_option("--reps", bench_args.reps)->capture_default_str();
  bench->add_option("--seed", bench_args.seed)->capture_default_str();
  bench->add_option("--format", bench_args.format)
      ->capture_default_str()
      ->check(CLI::IsMember({"csv", "json"}));
  bench->add_option("--out", bench_args.out_path, "Write records here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*sort) return cmd_sort(sort_args, out);
    if (*replay_cmd) return cmd_replay(replay_args, out);
    if (*verify) return cmd_verify(verify_args, out, err);
    if (*bench) return cmd_bench(bench_args, out, err);
  } catch (const UsageError& e) {
    err << "sortlab: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sortlab
