#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ainv/engine.hpp"
#include "ainv/instrumentation.hpp"
#include "ainv/types.hpp"

namespace ainv {

/// One requested disorder level: Inv/n as a decimal, or the reverse input.
struct InvLevel {
  bool reverse = false;
  double per_n = 0.0;
};

/// Accepts a non-negative decimal or "max". Throws std::invalid_argument.
InvLevel parse_inv_level(std::string_view text);

struct BenchConfig {
  std::vector<std::uint64_t> sizes;
  std::vector<InvLevel> levels;
  std::vector<std::string> inners{"merge"};
  std::uint32_t repeats = 1;
  std::uint64_t seed = 1;
  bool record_time = true;  // false writes 0 in wall_time_ns
  bool oracle = false;      // cross-check with brute_count up to oracle_limit
  std::size_t oracle_limit = 100'000;
  unsigned jobs = 1;
};

struct BenchRecord {
  std::uint64_t n = 0;
  std::string generator;
  std::uint64_t parameter = 0;
  std::uint64_t seed = 0;
  Count inv = 0;
  std::uint64_t final_q = 0;
  std::uint64_t phases = 0;
  std::uint64_t header_comparisons = 0;
  std::uint64_t split_count = 0;
  std::uint64_t split_work = 0;
  std::string inner_name;
  std::uint64_t wall_time_ns = 0;
  Count count = 0;
};

struct BenchFailure {
  std::size_t row = 0;  // index into BenchReport::rows
  std::string what;
};

struct BenchReport {
  std::vector<BenchRecord> rows;
  std::vector<BenchFailure> failures;
};

inline constexpr const char* kBenchCsvHeader =
    "n,generator,parameter,seed,inv,final_q,phases,header_comparisons,"
    "split_count,split_work,inner_name,wall_time_ns,count";

/// Runs every (size, level, inner, repeat) cell. Rows come back in that
/// nesting order regardless of `jobs`. Every row is checked for count == inv,
/// the phase bounds and the final_q bound; failures are collected, not thrown.
BenchReport run_bench(const BenchConfig& config);

void write_csv_row(std::ostream& out, const BenchRecord& row);

/// Appends rows to `path`, writing the header first only if the file is
/// missing or empty. Throws std::runtime_error if the file cannot be opened.
void append_csv(const std::string& path, const std::vector<BenchRecord>& rows);

}  // namespace ainv
