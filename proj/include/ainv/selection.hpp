#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ainv/types.hpp"

namespace ainv {

/// A key tagged with its 1-based position inside the block being split.
/// Ordering is lexicographic on (key, position), which is strict because
/// positions are distinct.
struct RankedItem {
  Key key = 0;
  std::size_t position = 0;

  friend constexpr bool operator==(const RankedItem&, const RankedItem&) = default;
  friend constexpr bool operator<(const RankedItem& a, const RankedItem& b) {
    return a.key < b.key || (a.key == b.key && a.position < b.position);
  }
};

/// Returns the item of 1-based rank `rank` under (key, position) order.
///
/// Deterministic median-of-medians with groups of five, worst-case linear.
/// The buffer is permuted in place. Throws std::out_of_range if rank is not
/// in [1, buffer.size()].
RankedItem select_rank(std::span<RankedItem> buffer, std::size_t rank);

/// Destination map of the stable partition described below, without
/// materialising the two parts. Writes new_position[i] (1-based) for the item
/// at index i and returns the rank-`rank` item. `work` is scratch.
RankedItem partition_map_by_rank(std::span<const RankedItem> items, std::size_t rank,
                                 std::span<std::size_t> new_position,
                                 std::vector<RankedItem>& work);

/// Result of splitting a block around a rank.
struct Partition {
  RankedItem pivot;                // item of rank `rank`, the largest in `first`
  std::vector<RankedItem> first;   // the `rank` smallest items, old order kept
  std::vector<RankedItem> second;  // the rest, old order kept
  // new_position[p - 1] is the 1-based slot of old position p in first||second.
  std::vector<std::size_t> new_position;
};

/// Stable two-way partition of `items` (given in old order, positions 1..m)
/// into the `rank` smallest and the remainder. `out` and `work` are reused
/// storage; their previous contents are discarded.
void stable_partition_by_rank(std::span<const RankedItem> items, std::size_t rank,
                              Partition& out, std::vector<RankedItem>& work);

Partition stable_partition_by_rank(std::span<const RankedItem> items, std::size_t rank);

}  // namespace ainv
