#pragma once

#include <cstdint>
#include <string>

namespace ainv {

/// Element of the input sequence. Ordered numerically; duplicates allowed.
using Key = std::int64_t;

/// Inversion counts. n(n-1)/2 does not fit in 64 bits once n exceeds 2^32.
__extension__ typedef unsigned __int128 Count;

/// Decimal rendering of a 128-bit count.
std::string format_count(Count value);

/// n(n-1)/2, the inversion count of a strictly decreasing sequence of length n.
constexpr Count max_inversions(std::uint64_t n) {
  if (n < 2) return 0;
  return static_cast<Count>(n) * (n - 1) / 2;
}

}  // namespace ainv
