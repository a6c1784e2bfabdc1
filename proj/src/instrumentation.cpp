#include "ainv/instrumentation.hpp"

#include <bit>
#include <sstream>

namespace ainv {
namespace {

// Unsigned 256-bit value as (high, low) halves.
struct Wide {
  Count high = 0;
  Count low = 0;

  friend bool operator<(const Wide& a, const Wide& b) {
    return a.high < b.high || (a.high == b.high && a.low < b.low);
  }
};

Wide multiply(Count a, Count b) {
  const Count mask = ~std::uint64_t{0};
  const Count a0 = a & mask, a1 = a >> 64;
  const Count b0 = b & mask, b1 = b >> 64;
  const Count p00 = a0 * b0, p01 = a0 * b1, p10 = a1 * b0, p11 = a1 * b1;
  const Count middle = (p00 >> 64) + (p01 & mask) + (p10 & mask);
  Wide out;
  out.low = (p00 & mask) | (middle << 64);
  out.high = p11 + (p01 >> 64) + (p10 >> 64) + (middle >> 64);
  return out;
}

}  // namespace

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::phase_comparisons: return "phase_comparisons";
    case BoundKind::phase_count: return "phase_count";
    case BoundKind::total_comparisons: return "total_comparisons";
    case BoundKind::split_work: return "split_work";
    case BoundKind::final_q: return "final_q";
  }
  return "unknown";
}

std::uint32_t max_phase_count(std::uint64_t n) {
  if (n <= 1) return 1;
  return static_cast<std::uint32_t>(std::bit_width(n - 1)) + 1;
}

std::vector<Violation> assert_phase_bounds(const RunStats& stats, std::uint64_t n) {
  std::vector<Violation> out;
  const Count n_squared = static_cast<Count>(n) * n;

  for (const PhaseRecord& phase : stats.phases) {
    // comparisons <= n/sqrt(q) + t + 1  <=>  excess <= 0 or excess^2 * q <= n^2
    if (phase.comparisons <= phase.inserted + 1) continue;
    const Count excess = phase.comparisons - phase.inserted - 1;
    if (excess * excess * phase.q > n_squared) {
      std::ostringstream msg;
      msg << "comparisons=" << phase.comparisons << " exceeds n/sqrt(q)+t+1 with n=" << n
          << " q=" << phase.q << " t=" << phase.inserted;
      out.push_back({BoundKind::phase_comparisons, phase.index, msg.str()});
    }
  }

  const std::uint32_t phase_limit = max_phase_count(n);
  if (stats.phases.size() > phase_limit) {
    out.push_back({BoundKind::phase_count, 0,
                   "phases=" + std::to_string(stats.phases.size()) + " > ceil(lg n)+1=" +
                       std::to_string(phase_limit)});
  }
  if (static_cast<Count>(stats.total_header_comparisons) > static_cast<Count>(n) * 6) {
    out.push_back({BoundKind::total_comparisons, 0,
                   "header_comparisons=" + std::to_string(stats.total_header_comparisons) +
                       " > 6n=" + format_count(static_cast<Count>(n) * 6)});
  }
  if (static_cast<Count>(stats.split_work) > static_cast<Count>(n) * 8) {
    out.push_back({BoundKind::split_work, 0,
                   "split_work=" + std::to_string(stats.split_work) +
                       " > 8n=" + format_count(static_cast<Count>(n) * 8)});
  }
  return out;
}

std::optional<Violation> assert_qhat_bound(const RunStats& stats, std::uint64_t n, Count inv) {
  if (stats.final_q <= 2) return std::nullopt;
  // final_q * n^2 <= 4 * inv^2, compared as 256-bit products.
  const Wide lhs = multiply(static_cast<Count>(stats.final_q) * n, n);
  const Wide rhs = multiply(2 * inv, 2 * inv);
  if (!(rhs < lhs)) return std::nullopt;
  return Violation{BoundKind::final_q, 0,
                   "final_q=" + std::to_string(stats.final_q) + " > max(2, 4(Inv/n)^2) with n=" +
                       std::to_string(n) + " Inv=" + format_count(inv)};
}

std::string format_violation(const Violation& v) {
  std::string line(to_string(v.kind));
  if (v.phase != 0) line += " phase=" + std::to_string(v.phase);
  line += ": " + v.detail;
  return line;
}

std::string format_stats(const RunStats& stats) {
  std::ostringstream out;
  out << "final_q=" << stats.final_q << '\n'
      << "phases=" << stats.phases.size() << '\n'
      << "header_comparisons=" << stats.total_header_comparisons << '\n'
      << "split_count=" << stats.split_count << '\n'
      << "split_work=" << stats.split_work << '\n'
      << "inner_total_elements=" << stats.inner_total_elements << '\n';
  for (const PhaseRecord& phase : stats.phases) {
    out << "phase." << phase.index << ".q=" << phase.q << '\n'
        << "phase." << phase.index << ".inserted=" << phase.inserted << '\n'
        << "phase." << phase.index << ".comparisons=" << phase.comparisons << '\n';
  }
  return out.str();
}

}  // namespace ainv
