// ainv: adaptive inversion counting from the command line.
//
//   ainv count [FILE] [--format text|binary] [--inner merge|fenwick] [--stats] [--oracle]
//   ainv gen --n N --method M [--param P] [--seed S] [--format F] [-o FILE]
//   ainv verify [--n-max N] [--trials T] [--seed S] [--alphabet A] [--exhaustive]
//   ainv bench --sizes LIST --inv-per-n LIST [--inner LIST] [--repeats R] [--seed S] [--csv FILE]
//
// Exit codes: 0 success, 2 input or usage error, 3 correctness or invariant failure.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "ainv/bench.hpp"
#include "ainv/engine.hpp"
#include "ainv/inner_counters.hpp"
#include "ainv/instrumentation.hpp"
#include "ainv/io.hpp"
#include "ainv/oracles.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 2;
constexpr int kCorrectnessError = 3;

struct CountOptions {
  std::string input = "-";
  std::string format = "text";
  std::string inner = "merge";
  bool stats = false;
  bool oracle = false;
  std::size_t oracle_limit = ainv::kDefaultOracleLimit;
};

struct GenOptions {
  std::uint64_t n = 0;
  std::string method = "sorted";
  std::uint64_t param = 0;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string output = "-";
};

struct VerifyOptions {
  std::size_t n_max = 64;
  std::uint64_t trials = 100;
  std::uint64_t seed = 1;
  std::uint64_t alphabet = 0;
  bool exhaustive = false;
};

struct BenchOptions {
  std::vector<std::uint64_t> sizes;
  std::vector<std::string> levels;
  std::vector<std::string> inners{"merge"};
  std::uint32_t repeats = 1;
  std::uint64_t seed = 1;
  std::string csv;
  bool omit_timing = false;
  bool oracle = false;
  unsigned jobs = 1;
};

int run_count(const CountOptions& opt) {
  std::string data;
  if (opt.input == "-") {
    data = ainv::read_all(std::cin);
  } else {
    std::ifstream in(opt.input, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot read '" << opt.input << "'\n";
      return kInputError;
    }
    data = ainv::read_all(in);
  }

  std::vector<ainv::Key> keys;
  try {
    keys = ainv::parse_input(data, ainv::parse_input_format(opt.format));
  } catch (const ainv::InputError& e) {
    std::cerr << "error: " << (opt.input == "-" ? "<stdin>" : opt.input) << ": " << e.what()
              << '\n';
    return kInputError;
  }

  const auto inner = ainv::make_inner_counter(opt.inner);
  const ainv::CountResult result = ainv::count_inversions(keys, *inner);

  if (opt.oracle) {
    if (keys.size() > opt.oracle_limit) {
      std::cerr << "error: " << keys.size() << " keys exceed the oracle limit of "
                << opt.oracle_limit << " (raise --oracle-limit)\n";
      return kInputError;
    }
    const ainv::Count brute = ainv::brute_count(keys, opt.oracle_limit);
    if (brute != result.inversions) {
      std::cerr << "oracle mismatch: engine=" << ainv::format_count(result.inversions)
                << " brute=" << ainv::format_count(brute) << '\n';
      return kCorrectnessError;
    }
  }

  std::cout << ainv::format_count(result.inversions) << '\n';
  if (opt.stats) std::cerr << ainv::format_stats(result.stats);
  return kOk;
}

int run_gen(const GenOptions& opt) {
  ainv::GenSpec spec{.n = opt.n, .parameter = opt.param, .seed = opt.seed};
  std::vector<ainv::Key> keys;
  ainv::InputFormat format;
  try {
    spec.method = ainv::parse_gen_method(opt.method);
    format = ainv::parse_input_format(opt.format);
    keys = ainv::generate(spec);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }

  const std::string bytes = ainv::encode(keys, format);
  if (opt.output == "-") {
    std::cout.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    std::cout.flush();
    return kOk;
  }
  std::ofstream out(opt.output, std::ios::binary | std::ios::trunc);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    std::cerr << "error: cannot write '" << opt.output << "'\n";
    return kInputError;
  }
  return kOk;
}

// Returns a description of the first disagreement, or an empty string.
std::string check_one(const std::vector<ainv::Key>& keys,
                      const std::vector<std::unique_ptr<ainv::InnerCounter>>& inners) {
  const ainv::Count expected = ainv::brute_count(keys, keys.size());
  for (const auto& inner : inners) {
    const ainv::Count got = ainv::count_inversions(keys, *inner).inversions;
    if (got != expected) {
      return std::string(inner->name()) + " engine=" + ainv::format_count(got) +
             " brute=" + ainv::format_count(expected);
    }
  }
  return {};
}

// Greedily drops elements while the disagreement persists.
std::vector<ainv::Key> shrink(std::vector<ainv::Key> keys,
                              const std::vector<std::unique_ptr<ainv::InnerCounter>>& inners) {
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t i = 0; i < keys.size(); ++i) {
      std::vector<ainv::Key> candidate = keys;
      candidate.erase(candidate.begin() + static_cast<std::ptrdiff_t>(i));
      if (!check_one(candidate, inners).empty()) {
        keys = std::move(candidate);
        progress = true;
        break;
      }
    }
  }
  return keys;
}

int report_failure(const std::vector<ainv::Key>& keys,
                   const std::vector<std::unique_ptr<ainv::InnerCounter>>& inners) {
  const std::vector<ainv::Key> minimal = shrink(keys, inners);
  std::cout << "FAIL: " << check_one(minimal, inners) << '\n'
            << "minimal failing input: " << ainv::to_text(minimal);
  if (minimal.empty()) std::cout << '\n';
  return kCorrectnessError;
}

int run_verify(const VerifyOptions& opt) {
  if (opt.n_max > ainv::kDefaultOracleLimit) {
    std::cerr << "error: --n-max " << opt.n_max << " exceeds the oracle limit of "
              << ainv::kDefaultOracleLimit << '\n';
    return kInputError;
  }
  std::vector<std::unique_ptr<ainv::InnerCounter>> inners;
  for (auto name : ainv::inner_counter_names()) inners.push_back(ainv::make_inner_counter(name));

  if (opt.exhaustive) {
    if (opt.n_max > 10) {
      std::cerr << "error: exhaustive mode supports --n-max up to 10\n";
      return kInputError;
    }
    std::vector<ainv::Key> perm(opt.n_max);
    std::iota(perm.begin(), perm.end(), ainv::Key{1});
    std::uint64_t checked = 0;
    do {
      if (!check_one(perm, inners).empty()) return report_failure(perm, inners);
      ++checked;
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::cout << "exhaustive: " << checked << " permutations of length " << opt.n_max
              << " passed\n";
  }

  std::mt19937_64 rng(opt.seed);
  for (std::uint64_t t = 0; t < opt.trials; ++t) {
    std::vector<ainv::Key> keys(ainv::uniform_below(rng, opt.n_max + 1));
    for (auto& key : keys) {
      key = opt.alphabet == 0 ? static_cast<ainv::Key>(rng())
                              : static_cast<ainv::Key>(ainv::uniform_below(rng, opt.alphabet));
    }
    if (!check_one(keys, inners).empty()) return report_failure(keys, inners);
  }
  std::cout << "random: " << opt.trials << " trials passed\n"
            << "PASS\n";
  return kOk;
}

int run_bench(const BenchOptions& opt) {
  ainv::BenchConfig config;
  config.sizes = opt.sizes;
  config.inners = opt.inners;
  config.repeats = opt.repeats;
  config.seed = opt.seed;
  config.record_time = !opt.omit_timing;
  config.oracle = opt.oracle;
  config.jobs = opt.jobs;
  try {
    for (const std::string& level : opt.levels) config.levels.push_back(ainv::parse_inv_level(level));
    for (const std::string& inner : opt.inners) ainv::make_inner_counter(inner);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }

  const ainv::BenchReport report = ainv::run_bench(config);

  if (opt.csv.empty()) {
    std::cout << ainv::kBenchCsvHeader << '\n';
    for (const auto& row : report.rows) ainv::write_csv_row(std::cout, row);
  } else {
    try {
      ainv::append_csv(opt.csv, report.rows);
    } catch (const std::runtime_error& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kInputError;
    }
  }

  std::cerr << "rows=" << report.rows.size() << " failures=" << report.failures.size() << '\n';
  for (const auto& failure : report.failures) {
    std::cerr << "row " << failure.row << ": " << failure.what << '\n';
  }
  return report.failures.empty() ? kOk : kCorrectnessError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adaptive inversion counting"};
  app.require_subcommand(1);

  CountOptions count_opt;
  auto* count = app.add_subcommand("count", "Count inversions of a sequence");
  count->add_option("input", count_opt.input, "Input file, '-' for stdin");
  count->add_option("--format", count_opt.format, "text or binary")
      ->check(CLI::IsMember({"text", "binary"}));
  count->add_option("--inner", count_opt.inner, "Within-block counter")
      ->check(CLI::IsMember({"merge", "fenwick"}));
  count->add_flag("--stats", count_opt.stats, "Print run statistics to stderr");
  count->add_flag("--oracle", count_opt.oracle, "Cross-check against the quadratic counter");
  count->add_option("--oracle-limit", count_opt.oracle_limit, "Largest input for --oracle");

  GenOptions gen_opt;
  auto* gen = app.add_subcommand("gen", "Generate an input sequence");
  gen->add_option("--n", gen_opt.n, "Sequence length")->required();
  gen->add_option("--method", gen_opt.method,
                  "sorted, reverse, adjacent_swaps, window, uniform_random or constant");
  gen->add_option("--param", gen_opt.param, "Swap count, window width, alphabet size or key");
  gen->add_option("--seed", gen_opt.seed, "Random seed");
  gen->add_option("--format", gen_opt.format, "text or binary");
  gen->add_option("-o,--output,output", gen_opt.output, "Output file, '-' for stdout");

  VerifyOptions verify_opt;
  auto* verify = app.add_subcommand("verify", "Cross-check the engine against brute force");
  verify->add_option("--n-max", verify_opt.n_max, "Largest random length");
  verify->add_option("--trials", verify_opt.trials, "Random trials");
  verify->add_option("--seed", verify_opt.seed, "Random seed");
  verify->add_option("--alphabet", verify_opt.alphabet, "Alphabet size, 0 for all 64-bit keys");
  verify->add_flag("--exhaustive", verify_opt.exhaustive, "Also check every permutation of 1..n-max");

  BenchOptions bench_opt;
  auto* bench = app.add_subcommand("bench", "Benchmark over sizes and disorder levels");
  bench->add_option("--sizes", bench_opt.sizes, "Comma-separated sizes")
      ->required()
      ->delimiter(',');
  bench->add_option("--inv-per-n", bench_opt.levels, "Comma-separated Inv/n levels or 'max'")
      ->required()
      ->delimiter(',');
  bench->add_option("--inner", bench_opt.inners, "Comma-separated inner counters")->delimiter(',');
  bench->add_option("--repeats", bench_opt.repeats, "Runs per cell")->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_opt.seed, "Generator seed");
  bench->add_option("--csv", bench_opt.csv, "Append rows to this file instead of stdout");
  bench->add_flag("--omit-timing", bench_opt.omit_timing, "Write 0 for wall_time_ns");
  bench->add_flag("--oracle", bench_opt.oracle, "Check each generated input with brute force");
  bench->add_option("--jobs", bench_opt.jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  if (*count) return run_count(count_opt);
  if (*gen) return run_gen(gen_opt);
  if (*verify) return run_verify(verify_opt);
  return run_bench(bench_opt);
}
