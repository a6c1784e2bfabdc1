#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ainv/engine.hpp"
#include "ainv/types.hpp"

namespace ainv {

enum class BoundKind {
  phase_comparisons,  // comparisons_i <= n/sqrt(q_i) + t_i + 1
  phase_count,        // phases <= ceil(lg n) + 1
  total_comparisons,  // total header comparisons <= 6n
  split_work,         // split work <= 8n
  final_q,            // final_q <= max(2, 4 (Inv/n)^2)
};

std::string_view to_string(BoundKind kind);

struct Violation {
  BoundKind kind;
  std::uint32_t phase = 0;  // 1-based; 0 when not tied to a phase
  std::string detail;
};

/// ceil(lg n) + 1 for n >= 2, and 1 for n <= 1.
std::uint32_t max_phase_count(std::uint64_t n);

/// Checks the per-phase comparison bound, the phase count, total header
/// comparisons and split work. Exact integer arithmetic throughout.
std::vector<Violation> assert_phase_bounds(const RunStats& stats, std::uint64_t n);

/// Passes iff final_q <= 2 or final_q * n^2 <= 4 * inv^2.
std::optional<Violation> assert_qhat_bound(const RunStats& stats, std::uint64_t n, Count inv);

/// Renders a violation as one line: "<kind> phase=<i>: <detail>".
std::string format_violation(const Violation& v);

/// RunStats as key=value lines, one per field, phases last.
std::string format_stats(const RunStats& stats);

}  // namespace ainv
