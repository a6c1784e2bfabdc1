#include "ainv/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "ainv/inner_counters.hpp"
#include "ainv/oracles.hpp"

namespace ainv {

InvLevel parse_inv_level(std::string_view text) {
  if (text == "max") return {.reverse = true};
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value) ||
      value < 0.0) {
    throw std::invalid_argument("invalid Inv/n level '" + std::string(text) +
                                "' (expected a non-negative number or 'max')");
  }
  return {.reverse = false, .per_n = value};
}

namespace {

struct Cell {
  std::uint64_t n = 0;
  InvLevel level;
  std::size_t first_row = 0;
};

GenSpec spec_for(std::uint64_t n, const InvLevel& level, std::uint64_t seed) {
  if (level.reverse) return {.n = n, .method = GenMethod::reverse, .parameter = 0, .seed = seed};
  const Count cap = max_inversions(n);
  const long double wanted = std::llround(static_cast<long double>(n) * level.per_n);
  const Count k = wanted >= static_cast<long double>(cap) ? cap : static_cast<Count>(wanted);
  return {.n = n,
          .method = GenMethod::adjacent_swaps,
          .parameter = static_cast<std::uint64_t>(k),
          .seed = seed};
}

void run_cell(const BenchConfig& config, const Cell& cell,
              const std::vector<std::unique_ptr<InnerCounter>>& inners,
              std::vector<BenchRecord>& rows, std::vector<BenchFailure>& failures) {
  const GenSpec spec = spec_for(cell.n, cell.level, config.seed);
  const std::vector<Key> input = generate(spec);
  const Count expected = spec.method == GenMethod::reverse ? max_inversions(cell.n)
                                                           : static_cast<Count>(spec.parameter);

  if (config.oracle && input.size() <= config.oracle_limit) {
    const Count brute = brute_count(input, config.oracle_limit);
    if (brute != expected) {
      failures.push_back({cell.first_row, "oracle: generator produced Inv=" + format_count(brute) +
                                              ", expected " + format_count(expected)});
    }
  }

  std::size_t row = cell.first_row;
  for (const auto& inner : inners) {
    for (std::uint32_t r = 0; r < config.repeats; ++r, ++row) {
      const auto start = std::chrono::steady_clock::now();
      const CountResult result = count_inversions(input, *inner);
      const auto stop = std::chrono::steady_clock::now();

      BenchRecord& rec = rows[row];
      rec.n = cell.n;
      rec.generator = std::string(to_string(spec.method));
      rec.parameter = spec.parameter;
      rec.seed = spec.seed;
      rec.inv = expected;
      rec.final_q = result.stats.final_q;
      rec.phases = result.stats.phases.size();
      rec.header_comparisons = result.stats.total_header_comparisons;
      rec.split_count = result.stats.split_count;
      rec.split_work = result.stats.split_work;
      rec.inner_name = std::string(inner->name());
      rec.wall_time_ns =
          config.record_time
              ? static_cast<std::uint64_t>(
                    std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count())
              : 0;
      rec.count = result.inversions;

      if (rec.count != rec.inv) {
        failures.push_back({row, "count=" + format_count(rec.count) +
                                     " differs from Inv=" + format_count(rec.inv)});
      }
      for (const Violation& v : assert_phase_bounds(result.stats, cell.n)) {
        failures.push_back({row, format_violation(v)});
      }
      if (auto v = assert_qhat_bound(result.stats, cell.n, rec.inv)) {
        failures.push_back({row, format_violation(*v)});
      }
    }
  }
}

}  // namespace

BenchReport run_bench(const BenchConfig& config) {
  std::vector<std::unique_ptr<InnerCounter>> inners;
  for (const std::string& name : config.inners) inners.push_back(make_inner_counter(name));

  std::vector<Cell> cells;
  const std::size_t rows_per_cell = inners.size() * config.repeats;
  for (std::uint64_t n : config.sizes) {
    for (const InvLevel& level : config.levels) {
      cells.push_back({n, level, cells.size() * rows_per_cell});
    }
  }

  BenchReport report;
  report.rows.resize(cells.size() * rows_per_cell);
  std::vector<std::vector<BenchFailure>> cell_failures(cells.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t c = next++; c < cells.size(); c = next++) {
      run_cell(config, cells[c], inners, report.rows, cell_failures[c]);
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs, cells.size()));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  for (auto& failures : cell_failures) {
    report.failures.insert(report.failures.end(), failures.begin(), failures.end());
  }
  return report;
}

void write_csv_row(std::ostream& out, const BenchRecord& row) {
  out << row.n << ',' << row.generator << ',' << row.parameter << ',' << row.seed << ','
      << format_count(row.inv) << ',' << row.final_q << ',' << row.phases << ','
      << row.header_comparisons << ',' << row.split_count << ',' << row.split_work << ','
      << row.inner_name << ',' << row.wall_time_ns << ',' << format_count(row.count) << '\n';
}

void append_csv(const std::string& path, const std::vector<BenchRecord>& rows) {
  std::error_code ec;
  const bool fresh = !std::filesystem::exists(path, ec) || std::filesystem::file_size(path, ec) == 0;
  std::ofstream out(path, std::ios::binary | std::ios::app);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  if (fresh) out << kBenchCsvHeader << '\n';
  for (const BenchRecord& row : rows) write_csv_row(out, row);
  out.flush();
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace ainv
